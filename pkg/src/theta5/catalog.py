"""Declarative model for theta identities plus a JSON file format.

An Identity asserts that a linear combination of scalar-weighted products of
theta factors vanishes identically in tau (and zeta, for function-kind
entries).  The built-in corpus lives in catalog_data; this module holds the
data model, structural validation, (de)serialization and mutation helpers.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction

from .cyclotomic import Cyclotomic, cyclo_root
from .theta import Characteristic, reduce_char


class Argument(Enum):
    AT_ZERO = "zero"       # theta constant: evaluated at zeta = 0
    SYMBOLIC_ZETA = "zeta"  # theta function of a symbolic zeta


class IdentityKind(Enum):
    CONSTANT = "constant"
    FUNCTION = "function"


class ExpectedStatus(Enum):
    HOLDS = "holds"
    SUSPECT_TYPO = "suspect"


@dataclass(frozen=True)
class ThetaFactor:
    char: Characteristic
    power: int = 1
    argument: Argument = Argument.AT_ZERO

    def __post_init__(self):
        if self.power < 1:
            raise ValueError("factor power must be >= 1")


@dataclass
class IdentityTerm:
    scalar: Cyclotomic
    factors: list

    @property
    def degree(self):
        return sum(f.power for f in self.factors)


@dataclass
class Identity:
    id: str
    kind: IdentityKind
    terms: list
    paper_ref: str = ""
    expected: ExpectedStatus = ExpectedStatus.HOLDS

    def __post_init__(self):
        if not self.terms:
            raise ValueError(f"{self.id}: identity needs at least one term")
        degrees = {t.degree for t in self.terms}
        if len(degrees) != 1:
            raise ValueError(
                f"{self.id}: inhomogeneous terms, degrees {sorted(degrees)}")
        if self.kind is IdentityKind.CONSTANT:
            for t in self.terms:
                if any(f.argument is Argument.SYMBOLIC_ZETA for f in t.factors):
                    raise ValueError(f"{self.id}: constant identity with "
                                     "symbolic-zeta factor")

    @property
    def degree(self):
        return self.terms[0].degree

    def characteristics(self):
        return sorted({f.char for t in self.terms for f in t.factors})


def normalize_identity(ident):
    """Reduce every factor's characteristic into [0,2) x [0,2), folding the
    even-shift scalars (raised to the factor power) into the term scalar."""
    new_terms = []
    for t in ident.terms:
        scalar = t.scalar
        factors = []
        for f in t.factors:
            c0, mu = reduce_char(f.char)
            if c0 != f.char:
                scalar = scalar * mu ** f.power
            factors.append(ThetaFactor(c0, f.power, f.argument))
        new_terms.append(IdentityTerm(scalar, factors))
    return Identity(ident.id, ident.kind, new_terms, ident.paper_ref,
                    ident.expected)


def corrupt_identity(ident, seed):
    """Deterministically flip the sign of one term's scalar, chosen by seed."""
    if not ident.terms:
        raise ValueError("identity has no terms")
    k = seed % len(ident.terms)
    terms = [IdentityTerm(-t.scalar if i == k else t.scalar, list(t.factors))
             for i, t in enumerate(ident.terms)]
    return Identity(ident.id + f"~corrupt{seed}", ident.kind, terms,
                    ident.paper_ref, ident.expected)


# -- scalar grammar -------------------------------------------------------------
# signed sum of monomials:  "p/q" | "p/q*zetaN^k" | "zetaN^k"  (whitespace-free
# rational literals; the bare-zeta form is accepted as coefficient 1)

_MONO = re.compile(
    r"^(?:(?P<rat>-?\d+(?:/\d+)?)(?:\*(?P<root1>zeta(?P<n1>\d+)(?:\^(?P<k1>\d+))?))?"
    r"|(?P<sign>-?)(?P<root2>zeta(?P<n2>\d+)(?:\^(?P<k2>\d+))?))$")


def parse_scalar(text):
    s = text.replace(" ", "")
    if not s:
        raise ValueError("empty scalar")
    # split into signed monomials
    parts = re.split(r"(?<=[^*/+-])(?=[+-])", s)
    total = Cyclotomic.zero()
    for part in parts:
        if part.startswith("+"):
            part = part[1:]
        m = _MONO.match(part)
        if not m:
            raise ValueError(f"bad scalar monomial: {part!r}")
        if m.group("rat") is not None:
            try:
                q = Fraction(m.group("rat"))
            except ZeroDivisionError:
                raise ValueError(f"zero denominator in {part!r}") from None
            if m.group("root1"):
                total = total + cyclo_root(int(m.group("k1") or 1),
                                           int(m.group("n1"))) * q
            else:
                total = total + Cyclotomic.from_rational(q)
        else:
            q = -1 if m.group("sign") == "-" else 1
            total = total + cyclo_root(int(m.group("k2") or 1),
                                       int(m.group("n2"))) * q
    return total


def _frac_str(q):
    q = Fraction(q)
    return f"{q.numerator}/{q.denominator}"


def identity_to_dict(ident):
    return {
        "id": ident.id,
        "kind": ident.kind.value,
        "paper_ref": ident.paper_ref,
        "expected": ident.expected.value,
        "terms": [
            {
                "scalar": t.scalar.to_string(),
                "factors": [
                    {"eps": _frac_str(f.char.eps), "epsp": _frac_str(f.char.epsp),
                     "pow": f.power, "arg": f.argument.value}
                    for f in t.factors
                ],
            }
            for t in ident.terms
        ],
    }


def identity_from_dict(d):
    try:
        kind = IdentityKind(d["kind"])
        expected = ExpectedStatus(d.get("expected", "holds"))
        terms = []
        for t in d["terms"]:
            scalar = parse_scalar(t["scalar"])
            if scalar.is_zero():
                raise ValueError("zero scalar")
            factors = [
                ThetaFactor(Characteristic.of(Fraction(f["eps"]),
                                              Fraction(f["epsp"])),
                            int(f["pow"]), Argument(f["arg"]))
                for f in t["factors"]
            ]
            terms.append(IdentityTerm(scalar, factors))
        return Identity(d["id"], kind, terms, d.get("paper_ref", ""), expected)
    except KeyError as e:
        raise ValueError(f"missing field {e} in identity "
                         f"{d.get('id', '<unnamed>')!r}") from None


def parse_identity(text):
    """Parse one identity from a JSON object fragment."""
    return identity_from_dict(json.loads(text))


def load_catalog(path):
    with open(path, encoding="utf-8") as fh:
        data = json.load(fh)
    if not isinstance(data, list):
        raise ValueError("catalog file must contain a JSON array")
    cat = [normalize_identity(identity_from_dict(d)) for d in data]
    ids = [i.id for i in cat]
    if len(set(ids)) != len(ids):
        raise ValueError("duplicate identity ids in catalog")
    return cat


def save_catalog(catalog, path):
    with open(path, "w", encoding="utf-8") as fh:
        json.dump([identity_to_dict(i) for i in catalog], fh, indent=1)
        fh.write("\n")


def catalog_to_json(catalog):
    return json.dumps([identity_to_dict(i) for i in catalog], indent=1)
