"""Parser and printer for polynomial expressions over declared variables.

Grammar:
    poly   := ['-'] term (('+'|'-') term)*
    term   := [coeff '*'] factor ('*' factor)* | coeff
    factor := ident ['^' nat]
    coeff  := int ['/' posint]
    ident  := letter (letter | digit | '_')*

print_polynomial inverts parse_polynomial on canonical forms: parsing the
printed string reproduces the polynomial exactly.
"""

from fractions import Fraction

from .algebra import GradedPolynomial, make_polynomial
from .errors import ExponentOverflow, PolynomialSyntaxError, UnknownVariable

MAX_EXPONENT = 2**31 - 1


class _Scanner:
    def __init__(self, text):
        self.text = text
        self.pos = 0

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self):
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def take(self, char):
        if self.peek() == char:
            self.pos += 1
            return True
        return False

    def expect_nat(self):
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == start:
            raise PolynomialSyntaxError("expected a number", start)
        return int(self.text[start:self.pos]), start

    def expect_ident(self):
        self.skip_ws()
        start = self.pos
        if self.pos >= len(self.text) or not (
            self.text[self.pos].isalpha()
        ):
            raise PolynomialSyntaxError("expected a variable name", start)
        self.pos += 1
        while self.pos < len(self.text) and (
            self.text[self.pos].isalnum() or self.text[self.pos] == "_"
        ):
            self.pos += 1
        return self.text[start:self.pos], start


def parse_polynomial(text, variables):
    """Canonical GradedPolynomial from a source string.

    `variables` is the ordered list of declared names; exponent tuples follow
    that order.
    """
    variables = list(variables)
    index = {name: i for i, name in enumerate(variables)}
    sc = _Scanner(text)
    terms = []
    sign = -1 if sc.take("-") else 1
    while True:
        terms.append(_parse_term(sc, index, len(variables), sign))
        sc.skip_ws()
        if sc.take("+"):
            sign = 1
        elif sc.take("-"):
            sign = -1
        else:
            break
    sc.skip_ws()
    if sc.pos != len(sc.text):
        raise PolynomialSyntaxError("unexpected trailing input", sc.pos)
    return make_polynomial(terms)


def _parse_term(sc, index, nvars, sign):
    coeff = Fraction(sign)
    exps = [0] * nvars
    ch = sc.peek()
    if ch.isdigit():
        num, _ = sc.expect_nat()
        coeff *= num
        if sc.take("/"):
            den, off = sc.expect_nat()
            if den == 0:
                raise PolynomialSyntaxError("zero denominator", off)
            coeff /= den
        sc.skip_ws()
        if not sc.take("*"):
            return (coeff, tuple(exps))
    elif not ch.isalpha():
        raise PolynomialSyntaxError("expected a term", sc.pos)
    while True:
        name, off = sc.expect_ident()
        if name not in index:
            raise UnknownVariable(name, off)
        e = 1
        if sc.take("^"):
            e, eoff = sc.expect_nat()
            if e > MAX_EXPONENT:
                raise ExponentOverflow(f"exponent {e} exceeds {MAX_EXPONENT}")
        exps[index[name]] += e
        sc.skip_ws()
        if not sc.take("*"):
            break
        if sc.peek().isdigit():
            # coefficients are only allowed up front; a digit here is an error
            raise PolynomialSyntaxError("expected a variable name", sc.pos)
    if any(e > MAX_EXPONENT for e in exps):
        raise ExponentOverflow("accumulated exponent exceeds the cap")
    return (coeff, tuple(exps))


def print_polynomial(poly, variables):
    """Canonical source string; the empty sum prints as '0'."""
    if poly.is_zero:
        return "0"
    variables = list(variables)
    pieces = []
    for k, (coeff, exps) in enumerate(poly.terms):
        mag = abs(coeff)
        factors = []
        for name, e in zip(variables, exps):
            if e == 1:
                factors.append(name)
            elif e > 1:
                factors.append(f"{name}^{e}")
        body = "*".join(factors)
        if not body:
            body = str(mag)
        elif mag != 1:
            body = f"{mag}*{body}"
        if k == 0:
            pieces.append(f"-{body}" if coeff < 0 else body)
        else:
            pieces.append(f"- {body}" if coeff < 0 else f"+ {body}")
    return " ".join(pieces)
