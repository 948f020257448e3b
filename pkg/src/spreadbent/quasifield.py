"""Pre-quasifield multiplications over GF(2^m) and their division maps.

Four families share one interface: the field itself (baseline), the
Dempwolff-Muller twist a^e * L(a x), the Knuth trace twist
a x + a^2 tr(beta x) + x^2 tr(beta a), and the Kantor trace twist
a^2 x + tr(a x) + a tr(x).  Throughout, qmul(a, x) computes a <> x and
division solves the LEFT operand: qdiv(y, x) is the unique a with
a <> x = y (and 0 when x = 0).  That operand is the slope of the spread
component through (x, y), which is why it comes first.

Division is available through two independent routes:

* qdiv_formula — the closed-form expression for each family, built on the
  inverse machinery in `polynomials` (Dickson exponents, combination
  polynomials, the square-plus-trace inverse),
* qdiv_oracle — brute-force scan over all 2^m candidates, plus a vectorized
  whole-table variant that inverts each column of the multiplication table.

Families constructed in strict mode (the default for m <= 7) sweep formula
against oracle over every input pair once, and refuse to exist on any
mismatch; the oracle is authoritative.

verify_axioms checks the defining laws exhaustively: additive group,
bijectivity of both one-sided multiplications on nonzero operands, left
distributivity a <> (y+z) = a <> y + a <> z, and the zero law 0 <> x = 0.
Right distributivity is reported separately: it distinguishes the
pre-semifields (field, Knuth, Kantor) from Dempwolff-Muller, which fails it.
"""

import math
import random
from dataclasses import dataclass

import numpy as np

from .field import FieldCtx, field_ctx
from .polynomials import (
    combo_coeffs,
    dickson_eval,
    dickson_inverse_exponent,
    eval_linearized,
    square_trace_inverse_eval,
)

STRICT_MAX_M = 7
AXIOM_MAX_M = 8

FAMILY_NAMES = ("field", "dm", "knuth", "kantor")


class ConsistencyError(RuntimeError):
    """Division has no/multiple solutions, or formula and oracle disagree."""


@dataclass(frozen=True)
class AxiomReport:
    """Outcome of the exhaustive law sweep for one family instance."""

    family: str
    m: int
    params: dict
    additive_group: bool
    left_bijective: bool
    right_bijective: bool
    left_distributive: bool
    zero_law: bool
    right_distributive: bool

    @property
    def passed(self) -> bool:
        """All laws required of the one-sided structure (right
        distributivity is extra and not part of this)."""
        return (self.additive_group and self.left_bijective
                and self.right_bijective and self.left_distributive
                and self.zero_law)

    @property
    def pre_semifield(self) -> bool:
        return self.passed and self.right_distributive

    def as_dict(self) -> dict:
        return {
            "family": self.family,
            "m": self.m,
            "additive_group": self.additive_group,
            "left_bijective": self.left_bijective,
            "right_bijective": self.right_bijective,
            "left_distributive": self.left_distributive,
            "zero_law": self.zero_law,
            "right_distributive": self.right_distributive,
            "passed": self.passed,
            "pre_semifield": self.pre_semifield,
            **{k: v for k, v in self.params.items()},
        }


class PreQuasifield:
    """Shared interface: scalar ops, cached tables, strict construction."""

    kind = "?"

    def __init__(self, ctx: FieldCtx, strict=None):
        self.ctx = ctx
        self.strict = ctx.m <= STRICT_MAX_M if strict is None else strict
        self._mult_table = None
        self._div_table = None
        if self.strict:
            self._strict_sweep()

    def __repr__(self):
        ps = ", ".join(f"{k}={v}" for k, v in self.params.items())
        return f"{type(self).__name__}(m={self.ctx.m}{', ' + ps if ps else ''})"

    @property
    def params(self) -> dict:
        return {}

    # -- scalar operations ---------------------------------------------------

    def qmul(self, a: int, x: int) -> int:
        raise NotImplementedError

    def qdiv_formula(self, y: int, x: int) -> int:
        raise NotImplementedError

    def qdiv_oracle(self, y: int, x: int) -> int:
        """Exhaustive scan for the unique a with a <> x = y; 0 when x = 0."""
        if x == 0:
            return 0
        sols = [a for a in range(self.ctx.order) if self.qmul(a, x) == y]
        if len(sols) != 1:
            raise ConsistencyError(
                f"{self.kind}: {len(sols)} solutions of a <> {x:#x} = {y:#x}")
        return sols[0]

    def parametric_map(self, x: int):
        """The map a -> a <> x with the right operand fixed, as a callable.

        A permutation of the field for x != 0, identically zero for x = 0.
        """
        return lambda a: self.qmul(a, x)

    # -- whole tables ----------------------------------------------------------

    def mult_table(self) -> np.ndarray:
        """T[a, x] = a <> x, shape (2^m, 2^m), int32."""
        if self._mult_table is None:
            T = self._mult_table_impl()
            T.setflags(write=False)
            self._mult_table = T
        return self._mult_table

    def div_table_formula(self) -> np.ndarray:
        """D[y, x] = closed-form division, same layout as mult_table."""
        if self._div_table is None:
            D = self._div_table_impl()
            D.setflags(write=False)
            self._div_table = D
        return self._div_table

    def div_table_oracle(self) -> np.ndarray:
        """D[y, x] from inverting each column of the multiplication table.

        Independent of the closed forms: only qmul feeds it.  Raises
        ConsistencyError if any column fails to be a permutation.
        """
        T = self.mult_table()
        q = self.ctx.order
        if np.any(T[:, 0]):
            raise ConsistencyError(f"{self.kind}: a <> 0 must vanish")
        body = T[:, 1:]
        expect = np.broadcast_to(np.arange(q, dtype=T.dtype)[:, None], body.shape)
        if not np.array_equal(np.sort(body, axis=0), expect):
            raise ConsistencyError(
                f"{self.kind}: some a -> a <> x is not a permutation")
        D = np.zeros((q, q), dtype=np.int32)
        cols = np.broadcast_to(np.arange(1, q), body.shape)
        D[body, cols] = np.arange(q, dtype=np.int32)[:, None]
        return D

    # -- implementation hooks ---------------------------------------------------

    def _mult_table_impl(self) -> np.ndarray:
        q = self.ctx.order
        return np.array([[self.qmul(a, x) for x in range(q)]
                         for a in range(q)], dtype=np.int32)

    def _div_table_impl(self) -> np.ndarray:
        q = self.ctx.order
        return np.array([[self.qdiv_formula(y, x) for x in range(q)]
                         for y in range(q)], dtype=np.int32)

    def _strict_sweep(self):
        if not np.array_equal(self.div_table_formula(), self.div_table_oracle()):
            raise ConsistencyError(
                f"{self.kind} (m={self.ctx.m}, {self.params}): closed-form "
                f"division disagrees with the brute-force oracle")


class FieldFamily(PreQuasifield):
    """The field itself: a <> x = a x, division is field division."""

    kind = "field"

    def qmul(self, a, x):
        return self.ctx.mul(a, x)

    def qdiv_formula(self, y, x):
        return self.ctx.mul(y, self.ctx.inv(x))

    def _mult_table_impl(self):
        q = self.ctx.order
        e = np.arange(q)
        return self.ctx.vmul(e[:, None], e[None, :])

    def _div_table_impl(self):
        q = self.ctx.order
        e = np.arange(q)
        return self.ctx.vmul(e[:, None], self.ctx.vinv(e)[None, :])


class DempwolffMullerFamily(PreQuasifield):
    """a <> x = a^e L(a x) with e = 2^(m-1) - 2^(k-1) - 1 and
    L(w) = w + w^2 + ... + w^(2^(k-1)).

    Requires odd m, odd k, 1 <= k < m, gcd(k, m) = 1.  Division runs through
    the Dickson polynomial D_d with d the inverse of 2^k - 1 mod 2^(2m) - 1:

        y // x  =  1 / (x * D_d(y^2 / x^(2^k + 1)))
    """

    kind = "dm"

    def __init__(self, ctx, k, strict=None):
        m = ctx.m
        if m % 2 == 0 or k % 2 == 0 or not 1 <= k < m or math.gcd(k, m) != 1:
            raise ValueError(
                f"need odd m and odd k with 1 <= k < m, gcd(k, m) = 1; "
                f"got m={m}, k={k}")
        self.k = k
        self.e = (1 << (m - 1)) - (1 << (k - 1)) - 1
        self.d = dickson_inverse_exponent((1 << k) - 1, m)
        super().__init__(ctx, strict)

    @property
    def params(self):
        return {"k": self.k, "e": self.e, "d": self.d}

    def _L(self, w):
        out, s = 0, w
        for _ in range(self.k):
            out ^= s
            s = self.ctx.sqr(s)
        return out

    def qmul(self, a, x):
        ctx = self.ctx
        return ctx.mul(ctx.pow(a, self.e), self._L(ctx.mul(a, x)))

    def qdiv_formula(self, y, x):
        ctx = self.ctx
        if x == 0:
            return 0
        arg = ctx.mul(ctx.sqr(y), ctx.inv(ctx.pow(x, (1 << self.k) + 1)))
        return ctx.inv(ctx.mul(x, dickson_eval(ctx, self.d, arg)))

    def _mult_table_impl(self):
        ctx = self.ctx
        e = np.arange(ctx.order)
        AX = ctx.vmul(e[:, None], e[None, :])
        L = np.zeros_like(AX)
        S = AX
        for _ in range(self.k):
            L ^= S
            S = ctx.vsqr(S)
        return ctx.vmul(ctx.vpow(e, self.e)[:, None], L)

    def _div_table_impl(self):
        ctx = self.ctx
        q = ctx.order
        e = np.arange(q)
        dick = np.array([dickson_eval(ctx, self.d, v) for v in range(q)],
                        dtype=np.int32)
        xpinv = ctx.vinv(ctx.vpow(e, (1 << self.k) + 1))
        ARG = ctx.vmul(ctx.vsqr(e)[:, None], xpinv[None, :])
        return ctx.vinv(ctx.vmul(e[None, :], dick[ARG]))


class KnuthFamily(PreQuasifield):
    """a <> x = a x + a^2 tr(beta x) + x^2 tr(beta a), odd m, beta != 0.

    Division folds the combination-polynomial inverse:

        y // x = (1 + tr(beta x)) y/x + x tr(beta y/x)
                 + x tr(beta x) C(y/x^2)

    with C the combination polynomial for the parameter beta*x.
    """

    kind = "knuth"

    def __init__(self, ctx, beta, strict=None):
        if ctx.m % 2 == 0:
            raise ValueError(f"need odd m; got m={ctx.m}")
        if not 0 < beta < ctx.order:
            raise ValueError(f"beta must be a nonzero field element; "
                             f"got {beta:#x}")
        self.beta = beta
        super().__init__(ctx, strict)

    @property
    def params(self):
        return {"beta": self.beta}

    def qmul(self, a, x):
        ctx = self.ctx
        out = ctx.mul(a, x)
        if ctx.trace(ctx.mul(self.beta, x)):
            out ^= ctx.sqr(a)
        if ctx.trace(ctx.mul(self.beta, a)):
            out ^= ctx.sqr(x)
        return out

    def qdiv_formula(self, y, x):
        ctx = self.ctx
        if x == 0:
            return 0
        bx = ctx.mul(self.beta, x)
        yx = ctx.mul(y, ctx.inv(x))
        out = yx if ctx.trace(bx) == 0 else 0
        if ctx.trace(ctx.mul(self.beta, yx)):
            out ^= x
        if ctx.trace(bx):
            yx2 = ctx.mul(yx, ctx.inv(x))
            out ^= ctx.mul(x, eval_linearized(ctx, combo_coeffs(ctx, bx), yx2))
        return out

    def _mult_table_impl(self):
        ctx = self.ctx
        e = np.arange(ctx.order)
        tb = ctx.vtrace(ctx.vmul(self.beta, e))
        sq = ctx.vsqr(e)
        T = ctx.vmul(e[:, None], e[None, :])
        T ^= sq[:, None] * tb[None, :]
        T ^= sq[None, :] * tb[:, None]
        return T

    def _div_table_impl(self):
        ctx = self.ctx
        q = ctx.order
        m = ctx.m
        e = np.arange(q)
        xinv = ctx.vinv(e)
        tbx = ctx.vtrace(ctx.vmul(self.beta, e))
        YX = ctx.vmul(e[:, None], xinv[None, :])
        D = YX * (tbx[None, :] == 0)
        D ^= e[None, :] * ctx.vtrace(ctx.vmul(self.beta, YX))
        # third term, only for columns with tr(beta x) = 1
        combo = np.zeros((m, q), dtype=np.int32)
        for x in range(1, q):
            if tbx[x]:
                combo[:, x] = combo_coeffs(ctx, ctx.mul(self.beta, x))
        C = np.zeros((q, q), dtype=np.int32)
        S = ctx.vmul(YX, xinv[None, :])  # y / x^2
        for i in range(m):
            C ^= ctx.vmul(combo[i][None, :], S)
            S = ctx.vsqr(S)
        D ^= ctx.vmul((e * tbx)[None, :], C)
        return D


class KantorFamily(PreQuasifield):
    """a <> x = a^2 x + tr(a x) + a tr(x), odd m.

    Division is the square-plus-trace inverse with the roles fixed as
    parameter = x, argument = y (the multiplication is exactly that kernel
    map in its left operand).
    """

    kind = "kantor"

    def __init__(self, ctx, strict=None):
        if ctx.m % 2 == 0:
            raise ValueError(f"need odd m; got m={ctx.m}")
        super().__init__(ctx, strict)

    def qmul(self, a, x):
        ctx = self.ctx
        out = ctx.mul(ctx.sqr(a), x) ^ ctx.trace(ctx.mul(a, x))
        if ctx.trace(x):
            out ^= a
        return out

    def qdiv_formula(self, y, x):
        return square_trace_inverse_eval(self.ctx, x, y)

    def _mult_table_impl(self):
        ctx = self.ctx
        e = np.arange(ctx.order)
        T = ctx.vmul(ctx.vsqr(e)[:, None], e[None, :])
        T ^= ctx.vtrace(ctx.vmul(e[:, None], e[None, :]))
        T ^= e[:, None] * ctx.vtrace(e)[None, :]
        return T

    def _div_table_impl(self):
        ctx = self.ctx
        q = ctx.order
        m = ctx.m
        h = 1 << (m - 1)
        e = np.arange(q)
        XY = ctx.vmul(e[:, None], e[None, :])  # row y, column x
        t_xy = ctx.vtrace(XY)
        D = ctx.vmul(ctx.vpow(e, h - 1)[None, :], ctx.vpow(e, h)[:, None] ^ t_xy)
        BR = ctx.vpow(XY, h)
        for i in range((m - 1) // 2 + 1):
            BR ^= ctx.vpow(XY, 1 << (2 * i))
        s = np.ones(q, dtype=np.int32)
        for i in range((m - 3) // 2 + 1):
            s ^= ctx.vpow(e, 1 << (2 * i))
        BR ^= t_xy * s[None, :]
        D ^= ctx.vmul((ctx.vinv(e) * ctx.vtrace(e))[None, :], BR)
        return D


def make_family(name: str, m: int, *, k=None, beta=None, modulus=None,
                strict=None) -> PreQuasifield:
    """Construct a family by name: field | dm | knuth | kantor.

    dm requires k; knuth requires beta; stray parameters are rejected."""
    name = name.lower()
    if name not in FAMILY_NAMES:
        raise ValueError(f"unknown family {name!r}; pick one of {FAMILY_NAMES}")
    if k is not None and name != "dm":
        raise ValueError(f"family {name!r} takes no parameter k")
    if beta is not None and name != "knuth":
        raise ValueError(f"family {name!r} takes no parameter beta")
    ctx = field_ctx(m, modulus)
    if name == "field":
        return FieldFamily(ctx, strict)
    if name == "dm":
        if k is None:
            raise ValueError("family 'dm' requires parameter k")
        return DempwolffMullerFamily(ctx, k, strict)
    if name == "knuth":
        if beta is None:
            raise ValueError("family 'knuth' requires parameter beta")
        return KnuthFamily(ctx, beta, strict)
    return KantorFamily(ctx, strict)


def _rows_are_permutations(T, lo):
    q = T.shape[1]
    expect = np.broadcast_to(np.arange(q, dtype=T.dtype)[None, :], T[lo:].shape)
    return np.array_equal(np.sort(T[lo:], axis=1), expect)


def verify_axioms(family: PreQuasifield) -> AxiomReport:
    """Exhaustively check the defining laws (m <= 8; the distributivity
    sweeps cover all 2^(3m) triples via whole-table gathers)."""
    ctx = family.ctx
    q = ctx.order
    if ctx.m > AXIOM_MAX_M:
        raise ValueError(f"exhaustive sweep capped at m = {AXIOM_MAX_M}")
    T = family.mult_table()
    e = np.arange(q)
    G = e[:, None] ^ e[None, :]

    additive = bool(np.array_equal(G, G.T) and not np.any(e ^ e)
                    and np.array_equal(G[0], e))
    if ctx.m <= 5:
        A3 = G[:, :, None] ^ e[None, None, :]
        B3 = e[:, None, None] ^ G[None, :, :]
        additive = additive and bool(np.array_equal(A3, B3))
    else:
        rng = random.Random(q)
        for _ in range(20000):
            x, y, z = (rng.randrange(q) for _ in range(3))
            if (x ^ y) ^ z != x ^ (y ^ z):
                additive = False
                break

    zero_law = bool(not np.any(T[0]) and not np.any(T[:, 0]))
    left_bij = _rows_are_permutations(T, 1)
    right_bij = _rows_are_permutations(T.T.copy(), 1)

    left_dist = True
    for a in range(q):
        R = T[a]
        if not np.array_equal(R[G], R[:, None] ^ R[None, :]):
            left_dist = False
            break

    right_dist = True
    for x in range(q):
        C = T[:, x]
        if not np.array_equal(C[G], C[:, None] ^ C[None, :]):
            right_dist = False
            break

    return AxiomReport(
        family=family.kind, m=ctx.m, params=family.params,
        additive_group=additive, left_bijective=left_bij,
        right_bijective=right_bij, left_distributive=left_dist,
        zero_law=zero_law, right_distributive=right_dist)
