"""
Exact multivariate Laurent polynomials in x1..xm

A Laurent polynomial is stored as its nonzero terms, exponent vector to
integer coefficient, sorted by exponent. Arithmetic is delegated to the
sparse polynomial rings of sympy: every value is split as x^shift * f
with f a polynomial not divisible by any variable, so products, sums and
exact quotients become polynomial operations.
"""

from functools import lru_cache
from typing import Dict, Iterable, List, Mapping, Sequence, Tuple

from sympy import ZZ, Add, Mul, together
from sympy.polys.polyerrors import ExactQuotientFailed
from sympy.polys.rings import PolyElement, PolyRing, ring

from .errors import InternalInvariantBroken, LaurentViolation, Undefined

Exponent = Tuple[int, ...]


@lru_cache(maxsize=None)
def ambient_ring(nvars: int) -> PolyRing:
    generators = ",".join(f"x{i}" for i in range(1, nvars + 1))
    R, *_ = ring(generators, ZZ)
    return R


class LaurentPoly:
    """Immutable Laurent polynomial with integer coefficients"""

    __slots__ = ("nvars", "_terms", "_split_cache")

    def __init__(self, nvars: int, terms: Mapping[Sequence[int], int]):
        cleaned: Dict[Exponent, int] = {}
        for exp, coef in terms.items():
            exp = tuple(int(e) for e in exp)
            if len(exp) != nvars:
                raise InternalInvariantBroken(
                    f"exponent {exp} has length {len(exp)}, expected {nvars}"
                )
            cleaned[exp] = cleaned.get(exp, 0) + int(coef)
        self.nvars = nvars
        self._terms: Tuple[Tuple[Exponent, int], ...] = tuple(
            sorted((exp, coef) for exp, coef in cleaned.items() if coef)
        )
        self._split_cache = None

    ### Constructors ###
    @classmethod
    def zero(cls, nvars: int) -> "LaurentPoly":
        return cls(nvars, {})

    @classmethod
    def one(cls, nvars: int) -> "LaurentPoly":
        return cls(nvars, {(0,) * nvars: 1})

    @classmethod
    def monomial(cls, exps: Sequence[int], coef: int = 1) -> "LaurentPoly":
        return cls(len(exps), {tuple(exps): coef})

    @classmethod
    def variable(cls, i: int, nvars: int) -> "LaurentPoly":
        """The variable x_i, 1-based"""
        exps = [0] * nvars
        exps[i - 1] = 1
        return cls.monomial(exps)

    @classmethod
    def from_json(cls, nvars: int, payload: Iterable[dict]) -> "LaurentPoly":
        return cls(
            nvars, {tuple(t["exp"]): int(t["coef"]) for t in payload}
        )

    ### Ring plumbing ###
    def _split(self) -> Tuple[Exponent, PolyElement]:
        if self._split_cache is None:
            R = ambient_ring(self.nvars)
            if not self._terms:
                self._split_cache = ((0,) * self.nvars, R.zero)
            else:
                shift = tuple(
                    min(exp[i] for exp, _ in self._terms)
                    for i in range(self.nvars)
                )
                poly = R.from_dict(
                    {
                        tuple(e - s for e, s in zip(exp, shift)): coef
                        for exp, coef in self._terms
                    }
                )
                self._split_cache = (shift, poly)
        return self._split_cache

    @classmethod
    def _join(
        cls, nvars: int, shift: Sequence[int], poly: PolyElement
    ) -> "LaurentPoly":
        return cls(
            nvars,
            {
                tuple(e + s for e, s in zip(exp, shift)): coef
                for exp, coef in poly.items()
            },
        )

    def _check_compatible(self, other: "LaurentPoly") -> None:
        if self.nvars != other.nvars:
            raise InternalInvariantBroken(
                f"mixing {self.nvars} and {other.nvars} variables"
            )

    ### Arithmetic ###
    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        self._check_compatible(other)
        if self.is_zero:
            return other
        if other.is_zero:
            return self
        R = ambient_ring(self.nvars)
        (s1, p1), (s2, p2) = self._split(), other._split()
        shift = tuple(min(a, b) for a, b in zip(s1, s2))
        lift1 = R.from_dict({tuple(a - s for a, s in zip(s1, shift)): 1})
        lift2 = R.from_dict({tuple(b - s for b, s in zip(s2, shift)): 1})
        return LaurentPoly._join(
            self.nvars, shift, p1 * lift1 + p2 * lift2
        )

    def __mul__(self, other: "LaurentPoly") -> "LaurentPoly":
        self._check_compatible(other)
        (s1, p1), (s2, p2) = self._split(), other._split()
        shift = tuple(a + b for a, b in zip(s1, s2))
        return LaurentPoly._join(self.nvars, shift, p1 * p2)

    def __pow__(self, exponent: int) -> "LaurentPoly":
        if exponent < 0:
            raise Undefined("negative powers are not Laurent polynomials")
        shift, poly = self._split()
        return LaurentPoly._join(
            self.nvars, tuple(s * exponent for s in shift), poly**exponent
        )

    def exact_divide(self, other: "LaurentPoly") -> "LaurentPoly":
        """Quotient in the Laurent ring; LaurentViolation when it does not exist"""
        self._check_compatible(other)
        if other.is_zero:
            raise LaurentViolation("division by the zero polynomial")
        if self.is_zero:
            return self
        (s1, p1), (s2, p2) = self._split(), other._split()
        try:
            quotient = p1.exquo(p2)
        except ExactQuotientFailed:
            raise LaurentViolation(f"{self} is not divisible by {other}")
        return LaurentPoly._join(
            self.nvars, tuple(a - b for a, b in zip(s1, s2)), quotient
        )

    def substitute_one(self, indices: Iterable[int]) -> "LaurentPoly":
        """Set the variables x_i (1-based) to 1 and merge terms"""
        R = ambient_ring(self.nvars)
        shift, poly = self._split()
        shift = list(shift)
        for i in indices:
            poly = poly.subs(R.gens[i - 1], 1)
            shift[i - 1] = 0
        return LaurentPoly._join(self.nvars, shift, poly)

    ### Inspection ###
    @property
    def is_zero(self) -> bool:
        return not self._terms

    @property
    def terms(self) -> Dict[Exponent, int]:
        return dict(self._terms)

    def items(self) -> Tuple[Tuple[Exponent, int], ...]:
        return self._terms

    def min_exponents(self) -> Exponent:
        if self.is_zero:
            raise Undefined("the zero polynomial has no exponents")
        return self._split()[0]

    def has_positive_coefficients(self) -> bool:
        return all(coef > 0 for _, coef in self._terms)

    def value_at_epsilon(self, i: int) -> int:
        """Value at the point with x_i = 0 (1-based) and every other variable 1"""
        total = 0
        for exp, coef in self._terms:
            if exp[i - 1] < 0:
                raise Undefined(f"{self} has a pole along x{i}")
            if exp[i - 1] == 0:
                total += coef
        return total

    def to_json(self) -> List[dict]:
        return [
            {"exp": list(exp), "coef": str(coef)} for exp, coef in self._terms
        ]

    def to_expr(self):
        """sympy expression over the symbols x1..xm"""
        symbols = ambient_ring(self.nvars).symbols
        return together(
            Add(
                *[
                    coef * Mul(*[s**e for s, e in zip(symbols, exp) if e])
                    for exp, coef in self._terms
                ]
            )
        )

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.nvars == other.nvars and self._terms == other._terms

    def __hash__(self) -> int:
        return hash((self.nvars, self._terms))

    def __getstate__(self) -> Tuple[int, tuple]:
        return self.nvars, self._terms

    def __setstate__(self, state: Tuple[int, tuple]) -> None:
        self.nvars, self._terms = state
        self._split_cache = None

    def __str__(self) -> str:
        return str(self.to_expr())

    def __repr__(self) -> str:
        return f"LaurentPoly({self})"
