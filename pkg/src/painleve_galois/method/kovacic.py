"""Kovacic case analysis for `y'' = r y` with rational `r`."""

from __future__ import annotations

from dataclasses import replace
from itertools import combinations_with_replacement, product
from math import comb, prod
from typing import TYPE_CHECKING

from sympy import Matrix, Rational

from painleve_galois.common.exceptions import InternalInconsistencyError
from painleve_galois.common.polynomial import ONE, Polynomial, poly_lcm
from painleve_galois.common.rational import rational_sqrt
from painleve_galois.common.rational_function import RationalFunction
from painleve_galois.dataset.galois_certificate import (
    Candidate,
    Case1Payload,
    Case2Payload,
    CaseFilter,
    CaseResult,
    GaloisCertificate,
    StrategyRecord,
)
from painleve_galois.dataset.singularity_profile import ExponentData
from painleve_galois.method.singularity import SingularityProfiler

if TYPE_CHECKING:
    from collections.abc import Callable, Iterator, Sequence

    from painleve_galois.common.types import DegreeFormula, Verdict
    from painleve_galois.dataset.nve_problem import NVEProblem
    from painleve_galois.dataset.singularity_profile import (
        PoleClass,
        SingularityProfile,
    )

Z = RationalFunction.identity()
HALF = Rational(1, 2)
DEFAULT_ENUMERATION_LIMIT = 20000


def _as_integer(value: Rational) -> int | None:
    value = Rational(value)
    return int(value) if value.q == 1 else None


def _logarithmic_derivative(factor: Polynomial) -> RationalFunction:
    return RationalFunction(factor.derivative(), factor)


def _exponent_triple(delta: Rational | None) -> tuple[int, ...] | None:
    """Integers among `2 - 2 delta, 2, 2 + 2 delta`.

    Args:
        delta (Rational | None): `sqrt(1 + 4 alpha)`, None when irrational

    Returns:
        tuple[int, ...] | None: sorted exponent set, None when `delta` is unknown
    """
    if delta is None:
        return None
    values = {_as_integer(2 + k * delta) for k in (-2, 0, 2)}
    return tuple(sorted(v for v in values if v is not None))


def monic_kernel_polynomial(
    operator: Callable[[RationalFunction], RationalFunction], degree: int
) -> Polynomial | None:
    """Monic polynomial of a given degree annihilated by a linear operator.

    The images of `1, z, ..., z^degree` are brought to a common denominator and the
    coefficients of `P` solve the resulting linear system exactly; free parameters are
    set to zero.

    Args:
        operator (Callable[[RationalFunction], RationalFunction]): linear differential operator
        degree (int): degree of `P`

    Returns:
        Polynomial | None: `P`, or None when no such polynomial exists

    Examples:
        >>> second_derivative = lambda p: p.derivative().derivative()
        >>> print(monic_kernel_polynomial(second_derivative, 1))
        z
        >>> print(monic_kernel_polynomial(second_derivative, 2))
        None
    """
    images = [
        operator(RationalFunction(Polynomial.from_coefficients([0] * i + [1])))
        for i in range(degree + 1)
    ]
    common = ONE
    for image in images:
        common = poly_lcm(common, image.denominator)
    columns = [(image * common).numerator.coefficients for image in images]
    height = max((len(column) for column in columns), default=0)
    if height == 0:
        return Polynomial.from_coefficients([0] * degree + [1])
    padded = [list(column) + [Rational(0)] * (height - len(column)) for column in columns]
    if degree == 0:
        return ONE if all(c == 0 for c in padded[0]) else None
    system = Matrix(height, degree, lambda k, i: padded[i][k])
    rhs = Matrix(height, 1, lambda k, _: -padded[degree][k])
    try:
        solution, parameters = system.gauss_jordan_solve(rhs)
    except ValueError:
        return None
    solution = solution.subs({symbol: 0 for symbol in parameters})
    return Polynomial.from_coefficients([*solution, 1])


class Kovacic:
    """Case filter, constructive searches for cases 1 and 2, and the final verdict."""

    @staticmethod
    def case_filter(profile: SingularityProfile) -> CaseFilter:
        """Cases surviving the classic necessary conditions.

        Case 1 needs every pole of order 1 or even, and an even or larger than 2 order at
        infinity. Case 2 needs a pole of order 2 or of odd order above 2. Case 3 needs
        every pole of order at most 2 and order at least 2 at infinity.

        Args:
            profile (SingularityProfile): singular points

        Returns:
            CaseFilter: surviving cases with one reason per excluded case
        """
        orders = profile.pole_orders
        infinity = profile.order_at_infinity
        allowed: list[int] = []
        reasons: list[str] = []

        odd_orders = sorted({k for k in orders if k > 1 and k % 2 == 1})
        if odd_orders:
            reasons.append(f"case 1 excluded: pole of odd order {odd_orders[0]}")
        elif infinity % 2 == 1 and infinity <= 2:
            reasons.append(
                f"case 1 excluded: order {infinity} at infinity is odd and below 3"
            )
        else:
            allowed.append(1)

        if any(k == 2 or (k > 2 and k % 2 == 1) for k in orders):
            allowed.append(2)
        else:
            reasons.append(
                "case 2 excluded: no pole of order 2 or of odd order above 2"
            )

        if any(k > 2 for k in orders):
            reasons.append(f"case 3 excluded: pole of order {max(orders)} above 2")
        elif infinity < 2:
            reasons.append(f"case 3 excluded: order {infinity} at infinity is below 2")
        else:
            allowed.append(3)
        return CaseFilter(allowed=tuple(allowed), reasons=tuple(reasons))

    @staticmethod
    def _infinity_set(profile: SingularityProfile) -> tuple[int, ...] | None:
        infinity = profile.order_at_infinity
        if infinity > 2:
            return (0, 2, 4)
        if infinity == 2:
            coefficient = profile.infinity_coefficient or Rational(0)
            return _exponent_triple(rational_sqrt(1 + 4 * coefficient))
        return (infinity,)

    @staticmethod
    def case2_exponents(profile: SingularityProfile) -> ExponentData:
        """Exponent sets of the imprimitive case.

        At a pole of order 2 the set is `{2 - (2 - 2j) delta | j = 0, 1, 2}` restricted to
        the integers; order 1 gives `{4}` and odd order `v > 2` gives `{v}`. At infinity the
        classic set is `{0, 2, 4}`, the same triple with `b = lim z^2 r`, or the order
        itself, for orders above, equal to and below 2. The set used with the all-points
        degree formula is `{o_infinity_paper}` whenever that order exceeds 2.

        Args:
            profile (SingularityProfile): singular points

        Returns:
            ExponentData: sets per class and at infinity; None marks an irrational `delta`

        Examples:
            >>> z = RationalFunction.identity()
            >>> profile = SingularityProfiler.singularity_profile(6 / z**2 + z)
            >>> data = Kovacic.case2_exponents(profile)
            >>> data.per_class[0][1], data.at_infinity, data.at_infinity_classic
            ((-8, 2, 12), (5,), (-1,))
        """
        per_class: list[tuple[Polynomial, tuple[int, ...] | None]] = []
        for pole_class in profile.pole_classes:
            if pole_class.order == 1:
                exponents: tuple[int, ...] | None = (4,)
            elif pole_class.order == 2:
                exponents = _exponent_triple(pole_class.delta)
            else:
                exponents = (pole_class.order,)
            per_class.append((pole_class.factor, exponents))
        classic = Kovacic._infinity_set(profile)
        if profile.o_infinity_paper > 2:
            at_infinity: tuple[int, ...] | None = (profile.o_infinity_paper,)
        else:
            at_infinity = classic
        return ExponentData(
            per_class=tuple(per_class),
            at_infinity=at_infinity,
            at_infinity_classic=classic,
        )

    @staticmethod
    def _degrees(
        total: int, exponents: ExponentData
    ) -> Iterator[tuple[DegreeFormula, int, int]]:
        """Admissible degrees for a given sum of finite exponents.

        Args:
            total (int): sum of the exponents chosen at the finite poles
            exponents (ExponentData): sets at infinity

        Yields:
            tuple[DegreeFormula, int, int]: formula, exponent at infinity and degree
        """
        for e_inf in exponents.at_infinity_classic or ():
            d = Rational(e_inf - total, 2)
            if d.q == 1 and d >= 0:
                yield "classic", e_inf, int(d)
        for e_inf in exponents.at_infinity or ():
            d = 2 - Rational(e_inf + total, 2)
            if d.q == 1 and d >= 0:
                yield "global", e_inf, int(d)

    @staticmethod
    def _parity_excludes(
        sets: Sequence[tuple[int, ...]],
        multiplicities: Sequence[int],
        at_infinity: tuple[int, ...],
    ) -> bool:
        """Whether every choice makes `e_inf -/+ sum e_c` odd.

        Args:
            sets (Sequence[tuple[int, ...]]): exponent set per class
            multiplicities (Sequence[int]): roots per class
            at_infinity (tuple[int, ...]): set at infinity

        Returns:
            bool: True when each set has a single parity and the total is odd
        """
        parities = [{e % 2 for e in s} for s in (*sets, at_infinity)]
        if any(len(p) != 1 for p in parities):
            return False
        total = sum(
            p.pop() * k for p, k in zip(parities, [*multiplicities, 1])
        )
        return total % 2 == 1

    @staticmethod
    def _exhaustive(
        sets: Sequence[tuple[int, ...]],
        multiplicities: Sequence[int],
        exponents: ExponentData,
    ) -> tuple[list[Candidate], int]:
        """Every root-level choice of exponents.

        Args:
            sets (Sequence[tuple[int, ...]]): exponent set per class
            multiplicities (Sequence[int]): roots per class
            exponents (ExponentData): sets at infinity

        Returns:
            tuple[list[Candidate], int]: distinct candidates and the number of assignments examined
        """
        root_sets = [s for s, k in zip(sets, multiplicities) for _ in range(k)]
        bounds = [0]
        for k in multiplicities:
            bounds.append(bounds[-1] + k)
        found: dict[Candidate, None] = {}
        examined = 0
        for choice in product(*root_sets):
            examined += 1
            for formula, e_inf, degree in Kovacic._degrees(sum(choice), exponents):
                per_class = tuple(
                    tuple(Rational(e) for e in sorted(choice[lo:hi]))
                    for lo, hi in zip(bounds, bounds[1:])
                )
                candidate = Candidate(
                    class_exponents=per_class,
                    infinity=Rational(e_inf),
                    formula=formula,
                    degree=degree,
                    uniform=all(len(set(c)) <= 1 for c in per_class),
                )
                found.setdefault(candidate, None)
        return list(found), examined

    @staticmethod
    def _aggregate(
        sets: Sequence[tuple[int, ...]],
        multiplicities: Sequence[int],
        exponents: ExponentData,
    ) -> tuple[list[Candidate], int]:
        """Choices aggregated into one multiset of exponents per class.

        Args:
            sets (Sequence[tuple[int, ...]]): exponent set per class
            multiplicities (Sequence[int]): roots per class
            exponents (ExponentData): sets at infinity

        Returns:
            tuple[list[Candidate], int]: distinct candidates and the number of multiset combinations examined
        """
        per_class_multisets = [
            list(combinations_with_replacement(s, k))
            for s, k in zip(sets, multiplicities)
        ]
        candidates: list[Candidate] = []
        examined = 0
        for combination in product(*per_class_multisets):
            examined += 1
            total = sum(sum(multiset) for multiset in combination)
            for formula, e_inf, degree in Kovacic._degrees(total, exponents):
                per_class = tuple(
                    tuple(Rational(e) for e in multiset) for multiset in combination
                )
                candidates.append(
                    Candidate(
                        class_exponents=per_class,
                        infinity=Rational(e_inf),
                        formula=formula,
                        degree=degree,
                        uniform=all(len(set(c)) <= 1 for c in per_class),
                    )
                )
        return candidates, examined

    @staticmethod
    def case2_operator(
        r: RationalFunction, theta: RationalFunction
    ) -> Callable[[RationalFunction], RationalFunction]:
        """Auxiliary operator of the imprimitive case.

        `P''' + 3 theta P'' + (3 theta^2 + 3 theta' - 4r) P'
        + (theta'' + 3 theta theta' + theta^3 - 4 r theta - 2 r') P`.

        Args:
            r (RationalFunction): potential
            theta (RationalFunction): `1/2 * sum e_c g'/g`

        Returns:
            Callable[[RationalFunction], RationalFunction]: the operator
        """
        t1 = theta.derivative()
        t2 = t1.derivative()
        c2 = 3 * theta
        c1 = 3 * theta**2 + 3 * t1 - 4 * r
        c0 = t2 + 3 * theta * t1 + theta**3 - 4 * r * theta - 2 * r.derivative()

        def operator(p: RationalFunction) -> RationalFunction:
            p1 = p.derivative()
            p2 = p1.derivative()
            return p2.derivative() + c2 * p2 + c1 * p1 + c0 * p

        return operator

    @staticmethod
    def case1_operator(
        r: RationalFunction, omega0: RationalFunction
    ) -> Callable[[RationalFunction], RationalFunction]:
        """Operator `P'' + 2 omega0 P' + (omega0' + omega0^2 - r) P`.

        Args:
            r (RationalFunction): potential
            omega0 (RationalFunction): `sum a_c g'/g`

        Returns:
            Callable[[RationalFunction], RationalFunction]: the operator
        """
        c0 = omega0.derivative() + omega0**2 - r

        def operator(p: RationalFunction) -> RationalFunction:
            p1 = p.derivative()
            return p1.derivative() + 2 * omega0 * p1 + c0 * p

        return operator

    @staticmethod
    def case2_search(
        r: RationalFunction,
        exponents: ExponentData,
        profile: SingularityProfile,
        enumeration_limit: int = DEFAULT_ENUMERATION_LIMIT,
    ) -> CaseResult:
        """Search the imprimitive case for a completion.

        Both degree formulas are tried, `d = (e_inf - sum e_c) / 2` and
        `d = 2 - (e_inf + sum e_c) / 2`. The parity shortcut always runs; the root-level
        enumeration runs when its size is within `enumeration_limit`, and the per-class
        multiset enumeration replaces it above the limit when parity is inconclusive.

        Args:
            r (RationalFunction): potential
            exponents (ExponentData): exponent sets
            profile (SingularityProfile): singular points
            enumeration_limit (int): largest root-level product enumerated

        Returns:
            CaseResult: success with a validated payload, excluded or undecided

        Raises:
            InternalInconsistencyError: when parity and enumeration disagree or a payload fails its identity
        """
        if not exponents.decided:
            reasons = [
                f"1 + 4 alpha is not a rational square at the roots of {factor}"
                for factor, values in exponents.per_class
                if values is None
            ]
            if exponents.at_infinity is None or exponents.at_infinity_classic is None:
                reasons.append("1 + 4b at infinity is not a rational square")
            return CaseResult(status="undecided", reasons=tuple(reasons))
        sets = [values or () for _, values in exponents.per_class]
        multiplicities = [c.root_count for c in profile.pole_classes]
        at_infinity = exponents.at_infinity or ()
        at_infinity_classic = exponents.at_infinity_classic or ()

        parity = Kovacic._parity_excludes(
            sets, multiplicities, at_infinity
        ) and Kovacic._parity_excludes(sets, multiplicities, at_infinity_classic)
        strategies = [
            StrategyRecord("parity", "excluded" if parity else "inconclusive")
        ]
        size = prod(len(s) ** k for s, k in zip(sets, multiplicities))
        candidates: list[Candidate] = []
        if size <= enumeration_limit:
            candidates, examined = Kovacic._exhaustive(sets, multiplicities, exponents)
            strategies.append(
                StrategyRecord(
                    "exhaustive", "candidates" if candidates else "excluded", examined
                )
            )
            if parity and candidates:
                raise InternalInconsistencyError(
                    "Parity shortcut and exhaustive enumeration disagree"
                )
        else:
            strategies.append(StrategyRecord("exhaustive", "skipped"))
            aggregate_size = prod(
                comb(len(s) + k - 1, k) for s, k in zip(sets, multiplicities)
            )
            if parity:
                strategies.append(StrategyRecord("aggregate", "skipped"))
            elif aggregate_size <= enumeration_limit:
                candidates, examined = Kovacic._aggregate(
                    sets, multiplicities, exponents
                )
                strategies.append(
                    StrategyRecord(
                        "aggregate", "candidates" if candidates else "excluded", examined
                    )
                )
            else:
                return CaseResult(
                    status="undecided",
                    reasons=(
                        f"{size} root-level assignments exceed the enumeration limit and parity is inconclusive",
                    ),
                    strategies=(*strategies, StrategyRecord("aggregate", "skipped")),
                )

        attempted: set[tuple[tuple[Rational, ...], int]] = set()
        mixed = False
        for candidate in candidates:
            if not candidate.uniform:
                mixed = True
                continue
            choice = tuple(c[0] if c else Rational(0) for c in candidate.class_exponents)
            if (choice, candidate.degree) in attempted:
                continue
            attempted.add((choice, candidate.degree))
            theta = RationalFunction.constant(0)
            for pole_class, e in zip(profile.pole_classes, choice):
                theta = theta + _logarithmic_derivative(pole_class.factor) * (HALF * e)
            operator = Kovacic.case2_operator(r, theta)
            polynomial = monic_kernel_polynomial(operator, candidate.degree)
            if polynomial is None:
                continue
            if not operator(RationalFunction(polynomial)).is_zero:
                raise InternalInconsistencyError(
                    f"Completion {polynomial} fails the auxiliary identity"
                )
            return CaseResult(
                status="success",
                reasons=(f"completion of degree {candidate.degree} found",),
                strategies=tuple(strategies),
                candidates=tuple(candidates),
                payload=Case2Payload(
                    theta=theta,
                    polynomial=polynomial,
                    degree=candidate.degree,
                    phi=theta + _logarithmic_derivative(polynomial),
                ),
            )
        if mixed:
            return CaseResult(
                status="undecided",
                reasons=(
                    "a candidate mixes exponents across the roots of one class",
                ),
                strategies=tuple(strategies),
                candidates=tuple(candidates),
            )
        reason = (
            "every exponent choice gives an odd numerator, so no degree is an integer"
            if parity
            else "no candidate admits a completion under either degree formula"
        )
        return CaseResult(
            status="excluded",
            reasons=(reason,),
            strategies=tuple(strategies),
            candidates=tuple(candidates),
        )

    @staticmethod
    def _case1_options(
        pole_class: PoleClass,
    ) -> tuple[Rational, ...] | None:
        if pole_class.order == 1:
            return (Rational(0), Rational(1))
        if pole_class.delta is None:
            return None
        return ((1 + pole_class.delta) * HALF, (1 - pole_class.delta) * HALF)

    @staticmethod
    def case1_search(
        r: RationalFunction,
        profile: SingularityProfile,
        enumeration_limit: int = DEFAULT_ENUMERATION_LIMIT,
    ) -> CaseResult:
        """Search for a rational solution of `omega' + omega^2 = r`.

        Covers poles of order at most 2 with order at least 2 at infinity. Exponents are
        `(1 +/- delta)/2` at order-2 poles, `0` or `1` at simple poles and
        `(1 +/- sqrt(1 + 4b))/2` at infinity. A class of simple poles takes one exponent
        for all of its roots: a root with exponent `1` is a root of `P` under exponent `0`.

        Args:
            r (RationalFunction): potential
            profile (SingularityProfile): singular points
            enumeration_limit (int): largest number of sign families enumerated

        Returns:
            CaseResult: success with a validated `omega`, excluded or undecided

        Raises:
            InternalInconsistencyError: when a returned `omega` fails the Riccati equation

        Examples:
            >>> z = RationalFunction.identity()
            >>> r = 2 / z**2
            >>> result = Kovacic.case1_search(r, SingularityProfiler.singularity_profile(r))
            >>> print(result.payload.omega)
            2/z
        """
        if any(k > 2 for k in profile.pole_orders) or profile.order_at_infinity < 2:
            return CaseResult(
                status="undecided",
                reasons=(
                    "poles of order above 2 or order below 2 at infinity are outside the constructive search",
                ),
            )
        options = [Kovacic._case1_options(c) for c in profile.pole_classes]
        delta_inf = rational_sqrt(1 + 4 * (profile.infinity_coefficient or 0))
        if delta_inf is None or any(o is None for o in options):
            reasons = [
                f"1 + 4 alpha is not a rational square at the roots of {c.factor}"
                for c, o in zip(profile.pole_classes, options)
                if o is None
            ]
            if delta_inf is None:
                reasons.append("1 + 4b at infinity is not a rational square")
            return CaseResult(status="undecided", reasons=tuple(reasons))
        infinity_options = ((1 + delta_inf) * HALF, (1 - delta_inf) * HALF)
        per_class_multisets = [
            [(e,) * c.root_count for e in o or ()]
            if c.order == 1
            else list(dict.fromkeys(combinations_with_replacement(o or (), c.root_count)))
            for o, c in zip(options, profile.pole_classes)
        ]
        families = prod(len(m) for m in per_class_multisets) * 2
        if families > enumeration_limit:
            return CaseResult(
                status="undecided",
                reasons=(f"{families} sign families exceed the enumeration limit",),
            )
        candidates: list[Candidate] = []
        mixed = False
        for a_inf in dict.fromkeys(infinity_options):
            for combination in product(*per_class_multisets):
                degree = _as_integer(a_inf - sum(sum(m) for m in combination))
                if degree is None or degree < 0:
                    continue
                per_class = tuple(tuple(sorted(m)) for m in combination)
                candidate = Candidate(
                    class_exponents=per_class,
                    infinity=a_inf,
                    formula="case1",
                    degree=degree,
                    uniform=all(len(set(m)) <= 1 for m in combination),
                )
                candidates.append(candidate)
                if not candidate.uniform:
                    mixed = True
                    continue
                omega0 = RationalFunction.constant(0)
                for pole_class, multiset in zip(profile.pole_classes, combination):
                    omega0 = omega0 + (
                        _logarithmic_derivative(pole_class.factor) * multiset[0]
                    )
                polynomial = monic_kernel_polynomial(
                    Kovacic.case1_operator(r, omega0), degree
                )
                if polynomial is None:
                    continue
                omega = omega0 + _logarithmic_derivative(polynomial)
                if omega.derivative() + omega**2 != r:
                    raise InternalInconsistencyError(
                        f"omega = {omega} fails the Riccati equation"
                    )
                return CaseResult(
                    status="success",
                    reasons=(f"rational Riccati solution with P of degree {degree}",),
                    candidates=tuple(candidates),
                    payload=Case1Payload(omega=omega, polynomial=polynomial, degree=degree),
                )
        if mixed:
            return CaseResult(
                status="undecided",
                reasons=("a candidate mixes exponents across the roots of one class",),
                candidates=tuple(candidates),
            )
        return CaseResult(
            status="excluded",
            reasons=("no exponent family yields a polynomial completion",),
            candidates=tuple(candidates),
        )

    @staticmethod
    def _annotations(
        r: RationalFunction, profile: SingularityProfile, allowed: tuple[int, ...]
    ) -> tuple[str, ...]:
        notes: list[str] = []
        if r == Z:
            notes.append("Airy equation")
        if profile.order_at_infinity < 2:
            notes.append("irregular singular point at infinity")
        if profile.m_plus > 2 and allowed == (2,):
            notes.extend(["L' = {2}", "h(2) = 2"])
        return tuple(notes)

    @staticmethod
    def _conclusion(context: NVEProblem | None, verdict: Verdict) -> str | None:
        if context is None or verdict != "SL2":
            return None
        n = context.parameter_n
        return (
            f"The identity component of the differential Galois group of the normal "
            f"variational equation along w(z, {n}) is SL(2, C), which is not abelian. "
            f"By the Morales-Ramis theorem the Painleve II Hamiltonian system with "
            f"alpha = {n} has no additional meromorphic first integral."
        )

    @staticmethod
    def analyze(
        r: RationalFunction,
        context: NVEProblem | None = None,
        enumeration_limit: int = DEFAULT_ENUMERATION_LIMIT,
    ) -> GaloisCertificate:
        """Profile, filter, search and conclude.

        Args:
            r (RationalFunction): potential of `y'' = r y`
            context (NVEProblem | None): provenance when `r` is a Painleve II normal variational potential
            enumeration_limit (int): largest exhaustive enumeration

        Returns:
            GaloisCertificate: self-validating certificate

        Examples:
            >>> Kovacic.analyze(RationalFunction.identity()).verdict
            'SL2'
        """
        parameter_n = None if context is None else context.parameter_n
        if r.is_zero:
            return GaloisCertificate(
                parameter_n=parameter_n,
                r=r,
                pole_classes=(),
                o_infinity_paper=None,
                order_at_infinity=None,
                m_plus=None,
                gamma=None,
                exponent_sets=None,
                case_filter=CaseFilter(
                    allowed=(1,), reasons=("r vanishes identically",)
                ),
                case1=CaseResult(
                    status="success",
                    reasons=("y = 1 solves the equation",),
                    payload=Case1Payload(
                        omega=RationalFunction.constant(0), polynomial=ONE, degree=0
                    ),
                ),
                case2=None,
                verdict="Liouvillian-case-1",
            )

        profile = SingularityProfiler.singularity_profile(r)
        case_filter = Kovacic.case_filter(profile)
        case_filter = replace(
            case_filter,
            annotations=Kovacic._annotations(r, profile, case_filter.allowed),
        )
        excluded = CaseResult(status="excluded", reasons=("excluded by the case filter",))
        case1 = (
            Kovacic.case1_search(r, profile, enumeration_limit)
            if 1 in case_filter.allowed
            else excluded
        )
        exponent_sets = None
        if 2 not in case_filter.allowed:
            case2 = excluded
        else:
            exponent_sets = Kovacic.case2_exponents(profile)
            if case1.status == "success":
                case2 = CaseResult(
                    status="not-attempted", reasons=("case 1 succeeded",)
                )
            else:
                case2 = Kovacic.case2_search(
                    r, exponent_sets, profile, enumeration_limit
                )

        verdict: Verdict
        if case1.status == "success":
            verdict = "Liouvillian-case-1"
        elif case2.status == "success":
            verdict = "Liouvillian-case-2"
        elif "undecided" in (case1.status, case2.status):
            verdict = "undecided"
        elif 3 in case_filter.allowed:
            verdict = "case-3-possible-unresolved"
        else:
            verdict = "SL2"
        return GaloisCertificate(
            parameter_n=parameter_n,
            r=r,
            pole_classes=profile.pole_classes,
            o_infinity_paper=profile.o_infinity_paper,
            order_at_infinity=profile.order_at_infinity,
            m_plus=profile.m_plus,
            gamma=profile.gamma,
            exponent_sets=exponent_sets,
            case_filter=case_filter,
            case1=case1,
            case2=case2,
            verdict=verdict,
            conclusion=Kovacic._conclusion(context, verdict),
        )
