"""Mechanical checks of the nil-radical argument on concrete instances.

Each ``verify_*`` function runs one family of exact checks on an
``(algebra, derivation, element)`` triple and returns a :class:`LemmaReport`.
:func:`trace_main_theorem` runs the whole chain that forces ``a^m = 0``
and returns the quantities it chose along the way.

Throughout, ``k`` is the least index with ``d^(k+1)(a) = 0`` and
``r_n = x^n a x^-n x^(k+2)``, an element of R[x; d].
"""

from __future__ import annotations

import enum
import random
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Sequence, Tuple

from .algebra import Algebra, AlgebraElement, algebra_nilpotency_index, power, subalgebra_closure, subspace_contains
from .derivation import Derivation, apply_power, local_nilpotency_index
from .errors import (
    DiffPolyError,
    LemmaViolation,
    NotLocallyNilpotent,
    NotNilpotentWithinBound,
    NTooSmall,
    TraceAssertionFailure,
)
from .generators import random_element
from .rational import Rational, to_rational
from .interpolation import RValuedPolynomial, interpolate, interpolate_batch
from .ore import (
    MINUS_INFINITY,
    OrePoly,
    bi_ore_mul,
    commute_power,
    conjugate,
    embed_weyl,
    embed_weyl_x,
    ore_mul,
    ore_pow,
    shifted_conjugate,
    x_times,
)
from .radical import nil_powers, quasi_inverse_nilpotent


class LemmaId(str, enum.Enum):
    PROPERTY1 = "Property1"
    LEMMA1 = "Lemma1"
    LEMMA3 = "Lemma3"
    LEMMA4 = "Lemma4"
    LEMMA5 = "Lemma5"
    MAIN_THEOREM = "MainTheorem"
    WEYL_HOM = "WeylHom"


@dataclass
class LemmaReport:
    lemma_id: LemmaId
    instance_description: str
    checks_run: int = 0
    failures: List[Tuple[str, str, str]] = field(default_factory=list)
    details: Dict[str, Any] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return not self.failures

    def check(self, description: str, expected, actual) -> bool:
        self.checks_run += 1
        if expected != actual:
            self.failures.append((description, str(expected), str(actual)))
            return False
        return True

    def fail(self, description: str, expected="", actual="") -> None:
        self.checks_run += 1
        self.failures.append((description, str(expected), str(actual)))

    def to_dict(self) -> Dict[str, Any]:
        return {
            "id": self.lemma_id.value,
            "checks": self.checks_run,
            "passed": self.passed,
            "failures": [
                {"description": desc, "expected": exp, "actual": act} for desc, exp, act in self.failures
            ],
            "details": self.details,
        }


@dataclass
class TheoremTrace:
    k: int
    nil_index: int
    t_degree: Any
    chosen_m: int
    chosen_M: int
    q_samples: List[Tuple[Rational, AlgebraElement]]
    q_polynomial: RValuedPolynomial
    constant_term: AlgebraElement
    a_power: AlgebraElement

    def summary(self) -> Dict[str, Any]:
        return {
            "k": self.k,
            "nil_index": self.nil_index,
            "t_degree": self.t_degree if self.t_degree != MINUS_INFINITY else "-inf",
            "m": self.chosen_m,
            "M": self.chosen_M,
            "q_sample_points": [str(n) for n, _ in self.q_samples],
            "q_identically_zero": self.q_polynomial.is_zero(),
            "constant_term": str(self.constant_term),
            "a_power": str(self.a_power),
        }


def describe(algebra: Algebra, d: Derivation, a: AlgebraElement) -> str:
    return f"R = span{{{', '.join(algebra.labels)}}}, {d!r}, a = {a}"


def _k(d: Derivation, a: AlgebraElement) -> int:
    k = local_nilpotency_index(d, a, d.parent.dim + 1)
    if k is None:
        raise NotLocallyNilpotent(f"d is not locally nilpotent on {a}")
    return k


def compute_N(k: int, m0: int) -> int:
    """Largest ``N`` whose window ``[2N, (k+2)N]`` for ``r_n^N`` still contains ``(k+2) m0``."""
    return (k + 2) * m0 // 2


# Property 1 ----------------------------------------------------------------


def verify_property1(algebra: Algebra, d: Derivation, a: AlgebraElement, n_max: int) -> LemmaReport:
    """Closed form for ``x^n a`` against ``n`` single applications of ``x c = c x + d(c)``."""
    report = LemmaReport(LemmaId.PROPERTY1, describe(algebra, d, a))
    stepwise = OrePoly.constant(d, a)
    for n in range(1, n_max + 1):
        stepwise = x_times(stepwise)
        report.check(f"x^{n} a", stepwise, commute_power(n, a, d))
    return report


# Lemma 1 -------------------------------------------------------------------


def verify_lemma1(algebra: Algebra, d: Derivation, a: AlgebraElement, m_max: int, n: int) -> LemmaReport:
    """Support of ``r_n^m`` lies in ``[2m, (k+2)m]`` and every coefficient lies in the subalgebra generated by the ``d^i(a)``."""
    k = _k(d, a)
    if n <= k:
        raise NTooSmall(f"n = {n} must exceed k = {k}")
    report = LemmaReport(LemmaId.LEMMA1, describe(algebra, d, a), details={"k": k, "n": n})
    sub = subalgebra_closure([apply_power(d, a, i) for i in range(k + 1)])
    report.details["subalgebra_dim"] = sub.dim
    r = shifted_conjugate(n, a, d)
    p = r
    for m in range(1, m_max + 1):
        if m > 1:
            p = ore_mul(p, r)
        lo, hi = 2 * m, (k + 2) * m
        outside = [e for e in p.support() if not lo <= e <= hi]
        report.check(f"m={m}: exponents outside [{lo}, {hi}]", [], outside)
        report.check(f"m={m}: no scalar part", False, p.has_scalar_part())
        for e, c in p.coefficients().items():
            report.check(f"m={m}: coefficient of x^{e} in subalgebra", True, subspace_contains(sub, c))
    return report


# Lemma 3 -------------------------------------------------------------------


def verify_lemma3(algebra: Algebra, d: Derivation, a: AlgebraElement, i_max: int = 5,
                  n_count: int = 4, bound: int = 64) -> LemmaReport:
    """Conjugating by ``x^i`` preserves the quasi-inverse's degree; ``r_n`` is a conjugate of ``r_(k+1)``."""
    k = _k(d, a)
    report = LemmaReport(LemmaId.LEMMA3, describe(algebra, d, a), details={"k": k})
    base = shifted_conjugate(k + 1, a, d)
    for n in range(k + 2, k + 7):
        report.check(f"r_{n} = x^{n - k - 1} r_{k + 1} x^-{n - k - 1}", shifted_conjugate(n, a, d),
                     conjugate(base, n - k - 1))
    for n in range(k + 1, k + 1 + n_count):
        r = shifted_conjugate(n, a, d)
        t = quasi_inverse_nilpotent(r, bound).inverse
        for i in range(1, i_max + 1):
            conj = quasi_inverse_nilpotent(conjugate(r, i), bound).inverse
            report.check(f"n={n}, i={i}: degree of quasi-inverse", t.degree(), conj.degree())
            report.check(f"n={n}, i={i}: quasi-inverse of conjugate = conjugate of quasi-inverse",
                         conjugate(t, i), conj)
    return report


# Lemma 4 -------------------------------------------------------------------


def _default_samples(k: int, degree_bound: int) -> List[int]:
    # one point beyond the minimum so the interpolant is cross-checked
    return list(range(k + 1, k + 3 + degree_bound))


def power_coefficient_polynomials(d: Derivation, a: AlgebraElement, m: int,
                                  n_samples: Optional[Sequence[int]] = None) -> Dict[int, RValuedPolynomial]:
    """Interpolate every coefficient ``b_i(n)`` of ``r_n^m = sum_i b_i x^((k+2)m - i)`` as a polynomial in ``n``.

    Each ``b_i`` is a combination of products of at most ``m`` binomials
    ``binomial(n, j)`` with ``j <= k``, so its degree in ``n`` is at most ``mk``.
    """
    k = _k(d, a)
    bound = m * k
    ns = list(n_samples) if n_samples is not None else _default_samples(k, bound)
    if any(n <= k for n in ns):
        raise NTooSmall(f"all sample points must exceed k = {k}")
    top = (k + 2) * m
    powers = [ore_pow(shifted_conjugate(n, a, d), m) for n in ns]
    values = {i: [p.coefficient_at(top - i) for p in powers] for i in range(m * k + 1)}
    return interpolate_batch(ns, values, bound)


def verify_lemma4(algebra: Algebra, d: Derivation, a: AlgebraElement, m_max: int,
                  n_samples: Optional[Sequence[int]] = None) -> LemmaReport:
    """Leading coefficient ``b_0 = a^m``; every other ``b_i(n)`` has zero constant term."""
    k = _k(d, a)
    report = LemmaReport(LemmaId.LEMMA4, describe(algebra, d, a), details={"k": k})
    for m in range(1, m_max + 1):
        polys = power_coefficient_polynomials(d, a, m, n_samples)
        expected_lead = RValuedPolynomial(algebra, [power(a, m)])
        report.check(f"m={m}: b_0 is the constant polynomial a^{m}", expected_lead, polys[0])
        for i in range(1, m * k + 1):
            report.check(f"m={m}: constant term of b_{i}(n)", algebra.zero(), polys[i].constant_term())
    return report


def verify_lemma4_at_zero(algebra: Algebra, d: Derivation, a: AlgebraElement, m_max: int,
                          n_samples: Optional[Sequence[int]] = None) -> LemmaReport:
    """Constant term of each ``b_i(n)`` equals the coefficient of ``(a x^(k+2))^m`` at the same exponent.

    This is the ``n = 0`` specialization (``x^0 a x^0 = a``), which holds on
    every instance, whereas the zero-constant-term claim needs
    ``a d^l(a)``-type products to vanish.
    """
    k = _k(d, a)
    report = LemmaReport(LemmaId.LEMMA4, describe(algebra, d, a), details={"k": k, "variant": "n=0"})
    r0 = OrePoly.monomial(d, a, k + 2)
    for m in range(1, m_max + 1):
        polys = power_coefficient_polynomials(d, a, m, n_samples)
        p0 = ore_pow(r0, m)
        top = (k + 2) * m
        for i, poly in polys.items():
            report.check(f"m={m}: b_{i}(0)", p0.coefficient_at(top - i), poly.constant_term())
    return report


# Lemma 5 -------------------------------------------------------------------


def lemma5_polynomial(d: Derivation, a: AlgebraElement, m0: int,
                      n_samples: Optional[Sequence[int]] = None, bound: int = 64) -> RValuedPolynomial:
    """Coefficient of ``x^((k+2) m0)`` in ``sum_{m=1}^{N} r_n^m`` interpolated in ``n``.

    Power ``m`` reaches that exponent at offset ``(k+2)(m - m0)``, whose
    coefficient has degree at most ``min(offset, mk)`` in ``n``; only powers
    below the nil index of ``r_n`` (the same for every ``n``) contribute.
    """
    k = _k(d, a)
    N = compute_N(k, m0)
    nil_index = len(nil_powers(shifted_conjugate(k + 1, a, d), bound)) + 1
    top = min(N, nil_index - 1)
    degree_bound = max([min((k + 2) * (m - m0), m * k) for m in range(m0, top + 1)], default=0)
    ns = list(n_samples) if n_samples is not None else _default_samples(k, degree_bound)
    if any(n <= k for n in ns):
        raise NTooSmall(f"all sample points must exceed k = {k}")
    target = (k + 2) * m0
    values = []
    for n in ns:
        powers = nil_powers(shifted_conjugate(n, a, d), bound)
        if len(powers) + 1 != nil_index:
            raise LemmaViolation(f"r_{n} has nil index {len(powers) + 1}, r_{k + 1} has {nil_index}")
        total = d.parent.zero()
        for p in powers[:N]:
            total = total + p.coefficient_at(target)
        values.append((to_rational(n), total))
    return interpolate(values, degree_bound)


def verify_lemma5(algebra: Algebra, d: Derivation, a: AlgebraElement, m0: int,
                  n_samples: Optional[Sequence[int]] = None) -> LemmaReport:
    k = _k(d, a)
    report = LemmaReport(LemmaId.LEMMA5, describe(algebra, d, a),
                         details={"k": k, "m0": m0, "N": compute_N(k, m0)})
    q = lemma5_polynomial(d, a, m0, n_samples)
    report.check(f"m0={m0}: constant term of Q(n)", power(a, m0), q.constant_term())
    return report


# Weyl embedding ------------------------------------------------------------


def verify_weyl_homomorphism(algebra: Algebra, d: Derivation, sample_count: int, seed: int = 0) -> LemmaReport:
    """``r -> sum d^i(r)/i! Y^i`` is multiplicative and carries ``x a - a x - d(a)`` to 0."""
    if not d.is_nilpotent:
        raise NotLocallyNilpotent("the Weyl embedding needs a locally nilpotent derivation")
    report = LemmaReport(LemmaId.WEYL_HOM, describe(algebra, d, algebra.zero()))
    rng = random.Random(seed)
    X = embed_weyl_x(algebra)
    basis = algebra.basis()
    for s in range(sample_count):
        if s < len(basis):
            a = basis[s]
            b = basis[(s + 1) % len(basis)]
        else:
            a = random_element(algebra, rng)
            b = random_element(algebra, rng)
        ea, eb = embed_weyl(a, d), embed_weyl(b, d)
        report.check(f"embed({a} * {b})", embed_weyl(a * b, d), bi_ore_mul(ea, eb))
        rel = bi_ore_mul(X, ea) - bi_ore_mul(ea, X) - embed_weyl(d(a), d)
        report.check(f"X embed({a}) - embed({a}) X - embed(d({a}))", True, rel.is_zero())
    return report


# main theorem --------------------------------------------------------------


def _fail(step: str, message: str, **context):
    raise TraceAssertionFailure(step, message, {k: str(v) for k, v in context.items()})


def trace_main_theorem(algebra: Algebra, d: Derivation, a: AlgebraElement, bound: int = 64) -> TheoremTrace:
    """Run the full chain ending in ``a^m = 0``.

    1. ``k`` from ``d``'s action on ``a``.
    2. ``T_n``, the quasi-inverse of ``r_n``; all share one degree because
       ``r_n`` is a conjugate of ``r_(k+1)``.
    3. ``m`` least with ``(k+2) m > deg T_n``.
    4. ``M`` least with ``2M > (k+2) m``, raised to the nil index of ``r_n``.
    5. ``Q(n)``, the coefficient of ``x^((k+2) m)`` in ``sum_{j<=M} r_n^j``,
       vanishes because that sum equals ``T_n - r_n^M T_n``.
    6. ``Q`` interpolates to the zero polynomial; its constant term is ``a^m``.

    Raises :class:`NotNilpotentWithinBound` when the algebra is not nilpotent
    within ``bound`` (the Jacobson-radical hypothesis cannot be certified) and
    :class:`TraceAssertionFailure` if any step comes out false.
    """
    if not d.is_nilpotent:
        raise NotLocallyNilpotent("the derivation's matrix is not nilpotent")
    if algebra_nilpotency_index(algebra, bound) is None:
        raise NotNilpotentWithinBound(
            f"no power R^j with j <= {bound} vanishes; R[x; d] is not certified Jacobson radical"
        )
    k = _k(d, a)
    width = k + 2
    base_n = k + 1
    r_base = shifted_conjugate(base_n, a, d)
    base = quasi_inverse_nilpotent(r_base, bound)
    nil_index = base.nil_index
    t_degree = base.inverse.degree()
    m = 1 if t_degree == MINUS_INFINITY else t_degree // width + 1
    target = width * m
    M = max(target // 2 + 1, nil_index)
    # r_n^j vanishes for j >= nil_index, for every n (conjugation preserves it)
    top = min(M, compute_N(k, m), nil_index - 1)
    q_bound = max(0, width * (top - m))
    ns = list(range(base_n, base_n + q_bound + 2))

    q_samples = []
    for n in ns:
        r = shifted_conjugate(n, a, d)
        if n > base_n and r != conjugate(r_base, n - base_n):
            _fail("conjugation", f"r_{n} is not x^{n - base_n} r_{base_n} x^-{n - base_n}")
        try:
            powers = nil_powers(r, bound)
        except NotNilpotentWithinBound as exc:
            _fail("nilpotency", f"r_{n} is not nilpotent within {bound}: {exc}")
        t = OrePoly.zero(d)
        for p in powers:
            t = t + p
        if n > base_n and t != conjugate(base.inverse, n - base_n):
            _fail("lemma3", f"T_{n} is not the conjugate of T_{base_n}")
        if t.degree() != t_degree:
            _fail("degree", f"deg T_{n} = {t.degree()} but deg T_{base_n} = {t_degree}")
        partial = OrePoly.zero(d)
        if len(powers) + 1 != nil_index:
            _fail("nilpotency", f"r_{n} has nil index {len(powers) + 1}, r_{base_n} has {nil_index}")
        for j in range(1, M + 1):
            rj = powers[j - 1] if j <= len(powers) else OrePoly.zero(d)
            partial = partial + rj
            if (j <= nil_index or j == M) and ore_mul(rj, t) != t - partial:
                _fail("telescoping", f"r_{n}^{j} T_{n} != T_{n} - sum_{{i<={j}}} r_{n}^i")
        r_M = powers[M - 1] if M <= len(powers) else OrePoly.zero(d)
        if r_M.low_degree() <= target:
            _fail("window", f"low degree of r_{n}^{M} is {r_M.low_degree()} <= {target}")
        if partial.scalar_at(target):
            _fail("coefficient", "scalar part at the target exponent")
        q_samples.append((to_rational(n), partial.coefficient_at(target)))
        if not q_samples[-1][1].is_zero():
            _fail("coefficient", f"Q({n}) = {q_samples[-1][1]} is not zero", n=n)

    q_poly = interpolate(q_samples, q_bound)
    if not q_poly.is_zero():
        _fail("interpolation", f"Q interpolates to {q_poly}, not 0")
    constant = q_poly.constant_term()
    a_power = power(a, m)
    if constant != a_power:
        _fail("conclusion", f"constant term {constant} differs from a^{m} = {a_power}")
    if not a_power.is_zero():
        _fail("conclusion", f"a^{m} = {a_power} is not zero")
    if not target > t_degree:
        _fail("choice of m", f"(k+2)m = {target} <= deg T = {t_degree}")
    return TheoremTrace(k, nil_index, t_degree, m, M, q_samples, q_poly, constant, a_power)


def run_main_theorem_suite(algebra: Algebra, d: Derivation, a: AlgebraElement, bound: int = 64) -> LemmaReport:
    """Report wrapper around :func:`trace_main_theorem`; hypothesis failures are recorded, not raised."""
    report = LemmaReport(LemmaId.MAIN_THEOREM, describe(algebra, d, a))
    try:
        trace = trace_main_theorem(algebra, d, a, bound)
    except NotNilpotentWithinBound as exc:
        report.fail("NotNilpotentWithinBound", "R nilpotent within bound", str(exc))
        report.details["error"] = "NotNilpotentWithinBound"
        return report
    except NotLocallyNilpotent as exc:
        report.fail("NotLocallyNilpotent", "d locally nilpotent", str(exc))
        report.details["error"] = "NotLocallyNilpotent"
        return report
    except TraceAssertionFailure as exc:
        report.fail(f"TraceAssertionFailure at {exc.step}", "", str(exc))
        report.details["error"] = "TraceAssertionFailure"
        report.details["context"] = exc.context
        return report
    report.checks_run = 1
    report.details.update(trace.summary())
    return report


# suite runner --------------------------------------------------------------

SUITE_ORDER = (
    LemmaId.PROPERTY1,
    LemmaId.LEMMA1,
    LemmaId.LEMMA3,
    LemmaId.LEMMA4,
    LemmaId.LEMMA5,
    LemmaId.WEYL_HOM,
    LemmaId.MAIN_THEOREM,
)


def _merge(lemma_id: LemmaId, description: str, parts: Sequence[LemmaReport]) -> LemmaReport:
    report = LemmaReport(lemma_id, description)
    for part in parts:
        report.checks_run += part.checks_run
        report.failures.extend(part.failures)
        report.details.update(part.details)
    return report


def _run(lemma_id: LemmaId, algebra: Algebra, d: Derivation, a: AlgebraElement,
         bound: int, power_bound: int) -> LemmaReport:
    if lemma_id is LemmaId.MAIN_THEOREM:
        return run_main_theorem_suite(algebra, d, a, bound)
    if lemma_id is LemmaId.WEYL_HOM:
        return verify_weyl_homomorphism(algebra, d, 25)
    if lemma_id is LemmaId.PROPERTY1:
        return verify_property1(algebra, d, a, 8)
    k = _k(d, a)
    desc = describe(algebra, d, a)
    if lemma_id is LemmaId.LEMMA1:
        return _merge(lemma_id, desc, [verify_lemma1(algebra, d, a, 4, n) for n in range(k + 1, k + 4)])
    if lemma_id is LemmaId.LEMMA3:
        return verify_lemma3(algebra, d, a, 5, 4, power_bound)
    if lemma_id is LemmaId.LEMMA4:
        return verify_lemma4(algebra, d, a, 3)
    if lemma_id is LemmaId.LEMMA5:
        parts = [verify_lemma5(algebra, d, a, m0) for m0 in (1, 2, 3)]
        report = _merge(lemma_id, desc, parts)
        report.details.pop("m0", None)
        report.details.pop("N", None)
        report.details["N"] = {str(m0): compute_N(k, m0) for m0 in (1, 2, 3)}
        return report
    raise ValueError(f"unknown suite {lemma_id}")


def run_suite(lemma_id: LemmaId, algebra: Algebra, d: Derivation, a: AlgebraElement,
              bound: int = 64, power_bound: int = 32) -> LemmaReport:
    """Run one suite with the default parameters; library errors become report failures.

    ``bound`` caps the search for a vanishing power of R, ``power_bound`` the
    search for a vanishing power of an element of R[x; d].
    """
    lemma_id = LemmaId(lemma_id)
    try:
        return _run(lemma_id, algebra, d, a, bound, power_bound)
    except DiffPolyError as exc:
        report = LemmaReport(lemma_id, describe(algebra, d, a))
        name = type(exc).__name__
        report.fail(name, "", str(exc))
        report.details["error"] = name
        return report
