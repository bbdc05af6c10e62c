"""Exact rational scalars, sparse polynomials and nullspace computation.

Coefficients are :class:`fractions.Fraction` throughout.  Polynomials are
stored as a mapping from exponent tuples to nonzero coefficients; the
number of variables (the *arity*) is part of the value.
"""
from __future__ import annotations

import math
from fractions import Fraction
from functools import reduce

from .exceptions import ArityError, NotDivisible

__all__ = ["Fraction", "as_rational", "format_rational", "parse_rational",
           "SparsePoly", "LinearForm", "substitute_linear", "exact_divide",
           "RatMatrix", "kernel_basis", "matrix_rank", "Eliminator"]


def as_rational(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, str):
        return parse_rational(value)
    if isinstance(value, float):
        raise TypeError("floating point coefficients are not accepted")
    return Fraction(value)


def format_rational(q) -> str:
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def parse_rational(text: str) -> Fraction:
    s = text.strip()
    if "." in s or "e" in s.lower():
        raise ValueError(f"rational {text!r} must be written as p or p/q")
    return Fraction(s)


def _grlex_key(exps):
    return (-sum(exps), tuple(-e for e in exps))


class SparsePoly:
    """Sparse polynomial with rational coefficients in ``arity`` variables.

    Instances are treated as immutable values.
    """

    __slots__ = ("arity", "terms")

    def __init__(self, arity: int, terms=None):
        self.arity = arity
        clean = {}
        if terms:
            items = terms.items() if isinstance(terms, dict) else terms
            for e, c in items:
                e = tuple(e)
                if len(e) != arity:
                    raise ArityError(f"exponent {e} does not have length {arity}")
                c = as_rational(c)
                if c:
                    c = clean.get(e, 0) + c
                    if c:
                        clean[e] = c
                    else:
                        clean.pop(e, None)
        self.terms = clean

    @classmethod
    def _raw(cls, arity, terms):
        p = object.__new__(cls)
        p.arity = arity
        p.terms = terms
        return p

    @classmethod
    def zero(cls, arity: int) -> "SparsePoly":
        return cls._raw(arity, {})

    @classmethod
    def constant(cls, arity: int, c) -> "SparsePoly":
        c = as_rational(c)
        return cls._raw(arity, {(0,) * arity: c} if c else {})

    @classmethod
    def variable(cls, arity: int, i: int, c=1) -> "SparsePoly":
        e = [0] * arity
        e[i] = 1
        return cls._raw(arity, {tuple(e): as_rational(c)})

    @classmethod
    def monomial(cls, exps, c=1) -> "SparsePoly":
        c = as_rational(c)
        exps = tuple(exps)
        return cls._raw(len(exps), {exps: c} if c else {})

    # -- basic protocol --------------------------------------------------------
    def __bool__(self):
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other):
        if isinstance(other, SparsePoly):
            return self.arity == other.arity and self.terms == other.terms
        if other == 0:
            return not self.terms
        return NotImplemented

    def __hash__(self):
        return hash((self.arity, frozenset(self.terms.items())))

    def sorted_terms(self) -> list:
        """Terms in graded lexicographic order, highest first."""
        return sorted(self.terms.items(), key=lambda t: _grlex_key(t[0]))

    def __repr__(self):
        return f"SparsePoly({self.arity}, {self.to_string()})"

    def to_string(self, names=None) -> str:
        if not self.terms:
            return "0"
        names = names or [f"u{i + 1}" for i in range(self.arity)]
        out = []
        for e, c in self.sorted_terms():
            mono = "*".join(n if k == 1 else f"{n}^{k}" for n, k in zip(names, e) if k)
            if not mono:
                s = format_rational(c)
            elif c == 1:
                s = mono
            elif c == -1:
                s = "-" + mono
            else:
                s = f"{format_rational(c)}*{mono}"
            out.append(s)
        return " + ".join(out).replace("+ -", "- ")

    def degree(self) -> int:
        return max((sum(e) for e in self.terms), default=-1)

    def is_homogeneous(self, degree=None) -> bool:
        degs = {sum(e) for e in self.terms}
        if degree is None:
            return len(degs) <= 1
        return degs <= {degree}

    def coefficient(self, exps) -> Fraction:
        return self.terms.get(tuple(exps), Fraction(0))

    # -- arithmetic ------------------------------------------------------------
    def _check(self, other):
        if self.arity != other.arity:
            raise ArityError(f"arity mismatch {self.arity} vs {other.arity}")

    def __add__(self, other):
        if isinstance(other, SparsePoly):
            self._check(other)
            return SparsePoly._raw(self.arity, _add(self.terms, other.terms, 1))
        return self + SparsePoly.constant(self.arity, other)

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, SparsePoly):
            self._check(other)
            return SparsePoly._raw(self.arity, _add(self.terms, other.terms, -1))
        return self - SparsePoly.constant(self.arity, other)

    def __neg__(self):
        return SparsePoly._raw(self.arity, {e: -c for e, c in self.terms.items()})

    def scale(self, c) -> "SparsePoly":
        c = as_rational(c)
        if not c:
            return SparsePoly.zero(self.arity)
        return SparsePoly._raw(self.arity, {e: c * v for e, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, SparsePoly):
            self._check(other)
            return SparsePoly._raw(self.arity, _mul(self.terms, other.terms))
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def __pow__(self, n: int):
        result = SparsePoly.constant(self.arity, 1)
        for _ in range(n):
            result = result * self
        return result

    def evaluate(self, values) -> Fraction:
        values = [as_rational(v) for v in values]
        if len(values) != self.arity:
            raise ArityError("wrong number of values")
        total = Fraction(0)
        for e, c in self.terms.items():
            t = c
            for v, k in zip(values, e):
                if k:
                    t *= v ** k
            total += t
        return total

    def rename(self, slots, target_arity: int) -> "SparsePoly":
        """Place variable i into slot ``slots[i]`` of a larger polynomial ring."""
        out = {}
        for e, c in self.terms.items():
            ne = [0] * target_arity
            for i, k in enumerate(e):
                ne[slots[i]] += k
            out[tuple(ne)] = c
        return SparsePoly._raw(target_arity, out)

    def embed(self, offset: int, target_arity: int) -> "SparsePoly":
        """Shift variables to slots offset..offset+arity-1."""
        pre = (0,) * offset
        post = (0,) * (target_arity - offset - self.arity)
        return SparsePoly._raw(target_arity, {pre + e + post: c for e, c in self.terms.items()})


def _add(a: dict, b: dict, sign: int) -> dict:
    out = dict(a)
    for e, c in b.items():
        v = out.get(e, 0) + (c if sign == 1 else -c)
        if v:
            out[e] = v
        else:
            out.pop(e, None)
    return out


def _mul(a: dict, b: dict) -> dict:
    if len(a) > len(b):
        a, b = b, a
    out = {}
    for e1, c1 in a.items():
        for e2, c2 in b.items():
            e = tuple(x + y for x, y in zip(e1, e2))
            v = out.get(e, 0) + c1 * c2
            if v:
                out[e] = v
            else:
                del out[e]
    return out


class LinearForm:
    """Integer linear combination a1*u1 + ... + ak*uk of ambient variables."""

    __slots__ = ("coefficients",)

    def __init__(self, coefficients):
        self.coefficients = tuple(coefficients)

    def __len__(self):
        return len(self.coefficients)

    def __eq__(self, other):
        return isinstance(other, LinearForm) and self.coefficients == other.coefficients

    def __hash__(self):
        return hash(self.coefficients)

    def __repr__(self):
        return f"LinearForm({list(self.coefficients)})"

    def __add__(self, other):
        return LinearForm(a + b for a, b in zip(self.coefficients, other.coefficients))

    def __sub__(self, other):
        return LinearForm(a - b for a, b in zip(self.coefficients, other.coefficients))

    def __neg__(self):
        return LinearForm(-a for a in self.coefficients)

    def scale(self, n):
        return LinearForm(n * a for a in self.coefficients)

    @classmethod
    def unit(cls, i: int, arity: int) -> "LinearForm":
        v = [0] * arity
        v[i] = 1
        return cls(v)

    @classmethod
    def zero(cls, arity: int) -> "LinearForm":
        return cls((0,) * arity)

    def to_poly(self) -> SparsePoly:
        n = len(self.coefficients)
        terms = {}
        for i, a in enumerate(self.coefficients):
            if a:
                e = [0] * n
                e[i] = 1
                terms[tuple(e)] = Fraction(a)
        return SparsePoly._raw(n, terms)


def _coeffs(form):
    return form.coefficients if isinstance(form, LinearForm) else tuple(form)


def substitute_linear(p: SparsePoly, forms, target_arity: int) -> SparsePoly:
    """Return p(L1, ..., Lm) expanded in ``target_arity`` variables."""
    forms = [_coeffs(f) for f in forms]
    if len(forms) != p.arity:
        raise ArityError(f"{len(forms)} forms given for a polynomial of arity {p.arity}")
    for f in forms:
        if len(f) != target_arity:
            raise ArityError(f"form {f} is not over {target_arity} variables")
    if not p.terms:
        return SparsePoly.zero(target_arity)

    # Fast path: every form is +-(single variable).
    simple = []
    for f in forms:
        nz = [(j, a) for j, a in enumerate(f) if a]
        if len(nz) == 1 and nz[0][1] in (1, -1):
            simple.append(nz[0])
        elif not nz:
            simple.append(None)
        else:
            simple = None
            break
    if simple is not None:
        out = {}
        for e, c in p.terms.items():
            ne = [0] * target_arity
            sign = 1
            dead = False
            for k, s in zip(e, simple):
                if not k:
                    continue
                if s is None:
                    dead = True
                    break
                j, a = s
                ne[j] += k
                if a < 0 and k & 1:
                    sign = -sign
            if dead:
                continue
            ne = tuple(ne)
            v = out.get(ne, 0) + (c if sign > 0 else -c)
            if v:
                out[ne] = v
            else:
                out.pop(ne, None)
        return SparsePoly._raw(target_arity, out)

    base = []
    for f in forms:
        terms = {}
        for j, a in enumerate(f):
            if a:
                e = [0] * target_arity
                e[j] = 1
                terms[tuple(e)] = Fraction(a)
        base.append(terms)
    cache = {}

    def power(i, k):
        key = (i, k)
        if key not in cache:
            if k == 0:
                cache[key] = {(0,) * target_arity: Fraction(1)}
            elif k == 1:
                cache[key] = base[i]
            else:
                cache[key] = _mul(power(i, k - 1), base[i])
        return cache[key]

    out = {}
    one = {(0,) * target_arity: Fraction(1)}
    for e, c in p.terms.items():
        acc = one
        for i, k in enumerate(e):
            if k:
                acc = _mul(acc, power(i, k))
                if not acc:
                    break
        for me, mc in acc.items():
            v = out.get(me, 0) + c * mc
            if v:
                out[me] = v
            else:
                out.pop(me, None)
    return SparsePoly._raw(target_arity, out)


def exact_divide(p: SparsePoly, form) -> SparsePoly:
    """Quotient of ``p`` by a linear form; raises :class:`NotDivisible`."""
    coeffs = _coeffs(form)
    if len(coeffs) != p.arity:
        raise ArityError("form and polynomial live in different rings")
    nz = [j for j, a in enumerate(coeffs) if a]
    if not nz:
        raise NotDivisible("division by the zero form")
    if not p.terms:
        return SparsePoly.zero(p.arity)
    j = nz[-1]
    cj = Fraction(coeffs[j])
    rest = {}
    for i, a in enumerate(coeffs):
        if a and i != j:
            e = [0] * p.arity
            e[i] = 1
            rest[tuple(e)] = Fraction(a)
    # Split p by powers of the pivot variable.
    by_power = {}
    for e, c in p.terms.items():
        k = e[j]
        e0 = e[:j] + (0,) + e[j + 1:]
        by_power.setdefault(k, {})[e0] = c
    top = max(by_power)
    rem = {k: dict(v) for k, v in by_power.items()}
    quotient = {}
    for k in range(top, 0, -1):
        r = rem.get(k)
        if not r:
            continue
        q = {e: c / cj for e, c in r.items()}
        for e, c in q.items():
            quotient[e[:j] + (k - 1,) + e[j + 1:]] = c
        if rest:
            prod = _mul(q, rest)
            rem[k - 1] = _add(rem.get(k - 1, {}), prod, -1)
    if rem.get(0):
        raise NotDivisible(f"remainder {SparsePoly._raw(p.arity, rem[0]).to_string()}")
    return SparsePoly._raw(p.arity, {e: c for e, c in quotient.items() if c})


class RatMatrix:
    """Dense rectangular matrix of rationals."""

    def __init__(self, rows, cols=None):
        rows = [[as_rational(x) for x in r] for r in rows]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        if any(len(r) != cols for r in rows):
            raise ValueError("matrix rows have different lengths")
        self.rows = rows
        self.ncols = cols

    @property
    def nrows(self):
        return len(self.rows)

    def __matmul__(self, vec):
        return [sum((a * b for a, b in zip(r, vec)), Fraction(0)) for r in self.rows]

    def sparse_rows(self):
        for r in self.rows:
            yield {j: x for j, x in enumerate(r) if x}


def _primitive(row: dict) -> dict:
    """Scale an integer row so its content is 1 and its leading entry positive."""
    g = reduce(math.gcd, row.values(), 0)
    lead = row[min(row)]
    if lead < 0:
        g = -g
    if g != 1:
        row = {k: v // g for k, v in row.items()}
    return row


def _integral(row: dict) -> dict:
    den = 1
    for v in row.values():
        if isinstance(v, Fraction) and v.denominator != 1:
            den = den * v.denominator // math.gcd(den, v.denominator)
    out = {}
    for k, v in row.items():
        v = v * den
        if isinstance(v, Fraction):
            v = v.numerator
        if v:
            out[k] = int(v)
    return out


class Eliminator:
    """Streaming fraction-free row reduction over the integers.

    Rows are added one at a time as sparse ``{column: value}`` dicts.  Each
    row is cleared of existing pivot columns by integer cross-multiplication
    and divided by its content, so entries stay integral and small.  The
    reduced echelon form is produced over the rationals only at the end.
    """

    def __init__(self, ncols: int):
        self.ncols = ncols
        self.pivots = {}

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def full(self) -> bool:
        return len(self.pivots) == self.ncols

    def add_row(self, row) -> bool:
        """Insert a row; return True when it increased the rank."""
        if len(self.pivots) == self.ncols:
            return False
        r = _integral(row)
        pivots = self.pivots
        while r:
            hit = [c for c in r if c in pivots]
            if not hit:
                break
            c = min(hit)
            p = pivots[c]
            a, b = r[c], p[c]
            g = math.gcd(a, b)
            a, b = a // g, b // g
            out = {k: b * v for k, v in r.items()}
            for k, v in p.items():
                nv = out.get(k, 0) - a * v
                if nv:
                    out[k] = nv
                else:
                    out.pop(k, None)
            r = _primitive(out) if out else out
        if not r:
            return False
        r = _primitive(r)
        pivots[min(r)] = r
        return True

    def reduced(self) -> dict:
        """Reduced row echelon form as {pivot column: {column: Fraction}}."""
        red = {}
        for c in sorted(self.pivots, reverse=True):
            row = self.pivots[c]
            lead = row[c]
            r = {k: Fraction(v, lead) for k, v in row.items()}
            for k in sorted(k for k in row if k != c and k in red):
                f = r.get(k)
                if not f:
                    continue
                for kk, vv in red[k].items():
                    nv = r.get(kk, 0) - f * vv
                    if nv:
                        r[kk] = nv
                    else:
                        r.pop(kk, None)
            red[c] = r
        return red

    def kernel(self) -> list:
        """Nullspace basis in reduced row echelon form."""
        return _rref_rows(self._parametrized())

    def _parametrized(self) -> list:
        red = self.reduced()
        free = [j for j in range(self.ncols) if j not in red]
        basis = []
        for f in free:
            v = [Fraction(0)] * self.ncols
            v[f] = Fraction(1)
            for c, r in red.items():
                x = r.get(f)
                if x:
                    v[c] = -x
            basis.append(v)
        return basis


def _rref_rows(vectors) -> list:
    """Reduced row echelon form of a list of independent vectors."""
    rows = [list(v) for v in vectors]
    pivots = []
    for i in range(len(rows)):
        r = rows[i]
        lead = next(j for j, x in enumerate(r) if x)
        inv = 1 / r[lead]
        r = [x * inv for x in r]
        rows[i] = r
        for k in range(len(rows)):
            if k != i and rows[k][lead]:
                f = rows[k][lead]
                rows[k] = [a - f * b for a, b in zip(rows[k], r)]
        pivots.append(lead)
    order = sorted(range(len(rows)), key=lambda i: pivots[i])
    return [rows[i] for i in order]


def _rows_of(matrix):
    if isinstance(matrix, RatMatrix):
        return matrix.ncols, list(matrix.sparse_rows())
    rows = [list(r) for r in matrix]
    ncols = len(rows[0]) if rows else 0
    return ncols, [{j: as_rational(x) for j, x in enumerate(r) if x} for r in rows]


def kernel_basis(matrix, ncols=None) -> list:
    """Canonical basis of the right nullspace of ``matrix``.

    The basis is returned in reduced row echelon form: each vector has
    leading entry 1, leading columns increase, and every leading column is
    zero in the other vectors.  It depends only on the nullspace.
    """
    n, rows = _rows_of(matrix)
    if ncols is not None:
        n = ncols
    elim = Eliminator(n)
    for r in rows:
        if elim.full():
            break
        if r:
            elim.add_row(r)
    return elim.kernel()


def matrix_rank(matrix) -> int:
    n, rows = _rows_of(matrix)
    elim = Eliminator(n)
    for r in rows:
        if r:
            elim.add_row(r)
    return elim.rank
