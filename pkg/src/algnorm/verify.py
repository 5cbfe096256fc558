"""Property-based verification: every claimed relation becomes a runnable check.

All checks on the l1 and sup paths decide inequalities exactly.  Direct
comparison handles values whose magnitudes are exact rationals; otherwise
the inequality is certified through squared-magnitude arithmetic (the
coordinatewise triangle trick, term-by-term product domination), so no
square root is ever evaluated to decide anything.  A floating comparison
with tolerance 2^-40 is the last resort, reached only for structures with
no exact certificate (and flagged in the report when used).

Identical sampler configuration yields byte-identical reports.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Optional

from .errors import EmptyComplement, NotAssociative
from .scalars import (GaussianRational, Magnitude, abs_add_dominates,
                      abs_sum_dominates, gr, magnitude_resolved,
                      magnitude_squared)
from .algebra import (AlgebraSpec, Element, Evens, MaskedPointwise,
                      StructureConstants, TrivialExtension, TruncatedPolyIdeal,
                      ZeroProduct, basis_vector, element, format_element,
                      index_bound, multiply, validate)
from .span import codimension
from .functionals import (FunctionalSpec, corollary_phi_n,
                          is_discontinuous_certificate, theorem_phi)
from .norms import L1, L2, SUP, NormSpec, base_magnitude, eval_norm, scalar_abs

TOLERANCE = 2.0 ** -40


def _p_value(base_mag: Magnitude, phi: Optional[GaussianRational]) -> Magnitude:
    """base(a) + |phi(a)| from a precomputed base magnitude and phi value."""
    if phi is None or (phi.re == 0 and phi.im == 0):
        return base_mag
    v, ms = scalar_abs(phi)
    return base_mag + Magnitude(v, ms)


# ---------------------------------------------------------------------------
# Sampling
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SamplerConfig:
    """Deterministic sampling parameters: one seed, one stream."""

    seed: int = 42
    trials: int = 10_000
    max_support: int = 8
    max_index: int = 64
    coeff_bound: int = 100


_POOL_SIZE = 512


class Sampler:
    """Seeded element sampler for one algebra.

    Coefficients are drawn uniformly from a pregenerated pool of Gaussian
    rationals with numerators and denominators bounded by the configured
    bound; 20% of element draws are forced to be pure basis vectors or
    members of A^2 so the functional tables' case splits all get exercised.
    """

    def __init__(self, cfg: SamplerConfig, spec: AlgebraSpec):
        self.cfg = cfg
        self.spec = spec
        self.rng = random.Random(cfg.seed)
        bound = index_bound(spec)
        self.max_index = min(cfg.max_index, bound) if bound is not None else cfg.max_index
        self.pool = self._build_pool()

    def _build_pool(self):
        rng, bound = self.rng, self.cfg.coeff_bound
        pool = [gr(1), gr(-1), gr(0, 1), gr(0, -1), gr(2), gr("1/2"), gr("3/5", "4/5")]
        while len(pool) < _POOL_SIZE:
            shape = rng.randrange(10)
            num = rng.randint(-bound, bound)
            den = rng.randint(1, bound)
            if shape < 5:
                z = gr(f"{num}/{den}")
            elif shape < 7:
                z = gr(0, f"{num}/{den}")
            else:
                num2 = rng.randint(-bound, bound)
                den2 = rng.randint(1, bound)
                z = gr(f"{num}/{den}", f"{num2}/{den2}")
            if not z.is_zero():
                pool.append(z)
        return pool

    def scalar(self) -> GaussianRational:
        return self.pool[int(self.rng.random() * len(self.pool))]

    def _generic(self) -> Element:
        rnd = self.rng.random
        pool, npool, mi = self.pool, len(self.pool), self.max_index
        coeffs = {}
        for _ in range(int(rnd() * self.cfg.max_support) + 1):
            coeffs[int(rnd() * mi) + 1] = pool[int(rnd() * npool)]
        e = Element.__new__(Element)
        e.coeffs = coeffs
        return e

    def element(self) -> Element:
        r = self.rng.random()
        if r < 0.1:
            return basis_vector(int(self.rng.random() * self.max_index) + 1)
        if r < 0.2:
            return multiply(self.spec, self._generic(), self._generic())
        return self._generic()

    def pair(self):
        return self.element(), self.element()


# ---------------------------------------------------------------------------
# Reports
# ---------------------------------------------------------------------------

_MAX_RECORDED = 10


@dataclass
class CheckReport:
    """name, what was sampled, and the violations found (first 10 in full)."""

    name: str
    subject: str
    trials: int
    violation_count: int = 0
    violations: list = field(default_factory=list)
    warnings: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.violation_count == 0

    def record(self, trial: int, relation: str, inputs: dict, observed: dict):
        self.violation_count += 1
        if len(self.violations) < _MAX_RECORDED:
            self.violations.append({
                "trial": trial,
                "relation": relation,
                "inputs": inputs,
                "observed": observed,
            })

    def warn(self, note: str):
        if note not in self.warnings:
            self.warnings.append(note)

    def to_json(self):
        return {
            "check": self.name,
            "subject": self.subject,
            "trials": self.trials,
            "passed": self.passed,
            "violation_count": self.violation_count,
            "violations": self.violations,
            "warnings": self.warnings,
        }


def _inputs_json(spec: AlgebraSpec, **elements) -> dict:
    return {name: format_element(spec, e) if isinstance(e, Element) else str(e)
            for name, e in elements.items()}


# ---------------------------------------------------------------------------
# Exact inequality machinery
# ---------------------------------------------------------------------------

def _product_terms(spec: AlgebraSpec, a: Element, b: Element):
    """Per-coordinate expansion terms of ab, and whether every (i, j) source
    pair feeds at most one coordinate with |coefficient| <= 1.

    Returns (terms, tame) with terms[k] a list of scalars summing to (ab)_k.
    tame=True is the structural half of the l1/sup product certificates.
    """
    terms: dict = {}
    tame = True
    if isinstance(spec, ZeroProduct):
        pass
    elif isinstance(spec, MaskedPointwise):
        member = spec.mask.member
        for k, za in a.coeffs.items():
            zb = b.coeffs.get(k)
            if zb is not None and member(k):
                terms.setdefault(k, []).append(za * zb)
    elif isinstance(spec, TruncatedPolyIdeal):
        n, N = spec.n, spec.N
        for i, za in a.coeffs.items():
            for j, zb in b.coeffs.items():
                idx = n + i + j - 1
                if n + idx - 1 <= N:
                    terms.setdefault(idx, []).append(za * zb)
    elif isinstance(spec, StructureConstants):
        prods = spec.products
        for i, za in a.coeffs.items():
            for j, zb in b.coeffs.items():
                entries = prods.get((i, j), ())
                mass_ok = len(entries) <= 1
                for k, c in entries:
                    ms = magnitude_squared(c)
                    if ms > 1:
                        mass_ok = False
                    terms.setdefault(k, []).append(za * zb * c)
                if not mass_ok:
                    tame = False
    elif isinstance(spec, TrivialExtension):
        ia = Element({k - 1: v for k, v in a.coeffs.items() if k != 1})
        ib = Element({k - 1: v for k, v in b.coeffs.items() if k != 1})
        inner_terms, tame = _product_terms(spec.inner, ia, ib)
        terms = {k + 1: ts for k, ts in inner_terms.items()}
    else:
        raise TypeError(f"unknown algebra family {spec!r}")
    return terms, tame


def _l1_submult_certificate(spec, a, b, ab) -> bool:
    """Certify base(ab) <= base(a) base(b) for l1 through exact squared steps:
    each coordinate of ab is dominated by the absolute sum of its expansion
    terms, and each term factors into |a_i||b_j||c| with |c| <= 1."""
    terms, tame = _product_terms(spec, a, b)
    if not tame:
        return False
    for k, ts in terms.items():
        if not abs_sum_dominates(ab.get(k), ts):
            return False
    return True


def _sup_submult_certificate(spec, a, b, ab) -> bool:
    terms, tame = _product_terms(spec, a, b)
    if not tame:
        return False
    if any(len(ts) > 1 for ts in terms.values()):
        return False  # colliding terms can exceed sup(a) sup(b)
    sup_a = max((magnitude_squared(z) for z in a.coeffs.values()), default=0)
    sup_b = max((magnitude_squared(z) for z in b.coeffs.values()), default=0)
    for k, z in ab.coeffs.items():
        if magnitude_squared(z) > sup_a * sup_b:
            return False
    return True


def _l2_submult_certificate(spec, a, b, ab) -> bool:
    sq = lambda e: sum((magnitude_squared(z) for z in e.coeffs.values()), start=0)
    return sq(ab) <= sq(a) * sq(b)


_SUBMULT_CERTS = {L1: _l1_submult_certificate, SUP: _sup_submult_certificate,
                  L2: _l2_submult_certificate}


def _triangle_certificate(base, a, b, apb, fa, fb, fapb) -> bool:
    """Certify p(a+b) <= p(a) + p(b) exactly, coordinate by coordinate.

    fa, fb, fapb are the precomputed phi values (None for bare base norms).
    """
    if fa is not None:
        if fapb != fa + fb or not abs_add_dominates(fapb, fa, fb):
            return False
    if base == L1:
        get_a, get_b, get_s = a.get, b.get, apb.get
        for k in set(a.coeffs) | set(b.coeffs):
            if not abs_add_dominates(get_s(k), get_a(k), get_b(k)):
                return False
        return True
    if base == SUP:
        if not apb.coeffs:
            return True
        k_star, best = None, None
        for k, z in apb.coeffs.items():
            ms = magnitude_squared(z)
            if best is None or ms > best:
                k_star, best = k, ms
        if not abs_add_dominates(apb.coeffs[k_star], a.get(k_star), b.get(k_star)):
            return False
        sup_a = max((magnitude_squared(z) for z in a.coeffs.values()), default=0)
        sup_b = max((magnitude_squared(z) for z in b.coeffs.values()), default=0)
        return (magnitude_squared(a.get(k_star)) <= sup_a
                and magnitude_squared(b.get(k_star)) <= sup_b)
    if base == L2:
        sq = lambda e: sum((magnitude_squared(z) for z in e.coeffs.values()), start=0)
        sa, sb, sab = sq(a), sq(b), sq(apb)
        t = sab - sa - sb
        return t <= 0 or t * t <= 4 * sa * sb
    return False


def _homogeneity_certificate(lam, a, la, fa, fla) -> bool:
    """Certify p(lam a) = |lam| p(a) through squared-magnitude identities."""
    ms_l = magnitude_squared(lam)
    if ms_l == 0:
        return la.is_zero()
    if len(la.coeffs) != len(a.coeffs):
        return False
    la_coeffs = la.coeffs
    for k, z in a.coeffs.items():
        w = la_coeffs.get(k)
        if w is None:
            return False
        if w.re * w.re + w.im * w.im != ms_l * (z.re * z.re + z.im * z.im):
            return False
    if fa is not None:
        if fla != lam * fa:
            return False
    return True


def _definitely_positive(m: Magnitude) -> bool:
    return m.definitely_positive()


# ---------------------------------------------------------------------------
# The checks
# ---------------------------------------------------------------------------

def check_submultiplicative(spec: AlgebraSpec, norm: NormSpec, cfg: SamplerConfig,
                            injected_pairs=()) -> CheckReport:
    """p(ab) <= p(a) p(b) on sampled pairs.

    Exact decision whenever the two sides compare exactly or the structural
    certificate applies; the 2^-40 float tolerance is only reached when
    neither does, and its use is flagged as a warning.
    """
    report = CheckReport("submultiplicative", norm.label(), cfg.trials)
    sampler = Sampler(cfg, spec)
    if cfg.trials == 0 and not injected_pairs:
        report.warn("0 trials: vacuous pass")
        return report
    f = norm.functional
    base = norm.base
    cert = _SUBMULT_CERTS[base]
    pairs = list(injected_pairs)
    feval = f.eval if f is not None else None
    for t in range(cfg.trials + len(pairs)):
        a, b = pairs[t] if t < len(pairs) else sampler.pair()
        ab = multiply(spec, a, b)
        fab = feval(ab) if feval is not None else None
        lhs = _p_value(base_magnitude(base, ab), fab)
        rhs = (_p_value(base_magnitude(base, a), feval(a) if feval else None)
               * _p_value(base_magnitude(base, b), feval(b) if feval else None))
        c = lhs.compare_exact(rhs)
        if c is not None:
            ok = c <= 0
        elif ((fab is None or (fab.re == 0 and fab.im == 0))
              and cert(spec, a, b, ab)):
            ok = True
        else:
            ok = lhs.approx <= rhs.approx + lhs.bound + rhs.bound + TOLERANCE
            report.warn("tolerance comparison used (no exact certificate)")
        if not ok:
            report.record(
                t, "p(ab) <= p(a) p(b)", _inputs_json(spec, a=a, b=b),
                {"p(ab)": str(lhs), "p(a)p(b)": str(rhs)},
            )
    return report


def check_norm_axioms(spec: AlgebraSpec, norm: NormSpec, cfg: SamplerConfig) -> CheckReport:
    """Definiteness, absolute homogeneity and the triangle inequality.

    Homogeneity and the triangle inequality are certified through exact
    squared-magnitude identities, so the check is exact for all three bases.
    """
    report = CheckReport("norm_axioms", norm.label(), cfg.trials)
    zero_val = eval_norm(norm, Element())
    if not zero_val.is_zero():
        report.record(0, "p(0) = 0", {}, {"p(0)": str(zero_val)})
    if cfg.trials == 0:
        report.warn("0 trials: vacuous pass")
        return report
    sampler = Sampler(cfg, spec)
    f = norm.functional
    base = norm.base
    feval = f.eval if f is not None else None
    for t in range(cfg.trials):
        a, b = sampler.pair()
        lam = sampler.scalar()
        fa = feval(a) if feval is not None else None
        pa = _p_value(base_magnitude(base, a), fa)
        # definiteness
        if a.coeffs:
            if not _definitely_positive(pa):
                report.record(t, "p(a) > 0 for a != 0", _inputs_json(spec, a=a),
                              {"p(a)": str(pa)})
        elif not pa.is_zero():
            report.record(t, "p(a) = 0 iff a = 0", _inputs_json(spec, a=a),
                          {"p(a)": str(pa)})
        # absolute homogeneity
        la = a.scale(lam)
        fla = feval(la) if feval is not None else None
        if not _homogeneity_certificate(lam, a, la, fa, fla):
            report.record(
                t, "p(lam a) = |lam| p(a)",
                _inputs_json(spec, a=a, lam=lam),
                {"p(lam a)": str(eval_norm(norm, la)),
                 "|lam| p(a)": str(magnitude_resolved(lam) * pa)},
            )
        # triangle inequality
        apb = a + b
        fb = feval(b) if feval is not None else None
        fapb = feval(apb) if feval is not None else None
        lhs = _p_value(base_magnitude(base, apb), fapb)
        rhs = pa + _p_value(base_magnitude(base, b), fb)
        c = lhs.compare_exact(rhs)
        if c is not None:
            ok = c <= 0
        else:
            ok = _triangle_certificate(base, a, b, apb, fa, fb, fapb)
        if not ok:
            report.record(
                t, "p(a+b) <= p(a) + p(b)", _inputs_json(spec, a=a, b=b),
                {"p(a+b)": str(lhs), "p(a)+p(b)": str(rhs)},
            )
    return report


def check_kernel_condition(spec: AlgebraSpec, f: FunctionalSpec,
                           cfg: SamplerConfig) -> CheckReport:
    """phi(ab) = 0 exactly, and ab lies in the computed A^2 span.

    For trivial extensions the adjoined coordinate of every product must
    additionally be zero.
    """
    report = CheckReport("kernel_condition", f.label(), cfg.trials)
    if cfg.trials == 0:
        report.warn("0 trials: vacuous pass")
        return report
    sampler = Sampler(cfg, spec)
    span = f.enum.span
    is_ext = isinstance(spec, TrivialExtension)
    for t in range(cfg.trials):
        a, b = sampler.pair()
        ab = multiply(spec, a, b)
        val = f.eval(ab)
        if not val.is_zero():
            report.record(t, "phi(ab) = 0", _inputs_json(spec, a=a, b=b),
                          {"phi(ab)": repr(val)})
        if not span.contains(ab):
            report.record(t, "ab in A^2", _inputs_json(spec, a=a, b=b),
                          {"ab": format_element(spec, ab)})
        if is_ext and not ab.get(TrivialExtension.ADJOINED_INDEX).is_zero():
            report.record(t, "adjoined coordinate of ab is 0",
                          _inputs_json(spec, a=a, b=b),
                          {"ab": format_element(spec, ab)})
    return report


def check_theorem_equivalence(spec: AlgebraSpec) -> CheckReport:
    """Codimension of A^2 is infinite iff the functional certificate is unbounded.

    Finite codimension must come with either an empty complement (no
    functional to build) or an exact finite basis supremum.
    """
    report = CheckReport("codimension_iff_unbounded", "theorem phi", 1)
    codim = codimension(spec)
    try:
        f = theorem_phi(spec)
    except EmptyComplement:
        if not (codim.is_finite and codim.value == 0):
            report.record(0, "empty complement only at codimension 0", {},
                          {"codimension": str(codim)})
        return report
    cert = is_discontinuous_certificate(f, L1)
    if codim.is_finite != (cert.kind == "bounded"):
        report.record(0, "infinite codimension iff unbounded certificate", {},
                      {"codimension": str(codim), "certificate": cert.kind})
    if cert.kind == "bounded" and cert.sup is None:
        report.record(0, "bounded certificate must carry an exact sup", {}, {})
    if cert.kind == "unbounded":
        values = [w.phi_value for w in cert.witnesses]
        if values != sorted(set(values)) or len(values) < 2:
            report.record(0, "witness values must grow strictly", {},
                          {"values": values})
    return report


# ---------------------------------------------------------------------------
# Negative control
# ---------------------------------------------------------------------------

class TableFunctional:
    """A raw per-index linear functional with no span reduction.

    Used by the negative control: a table that does NOT vanish on A^2, whose
    'norm' q(a) = base(a) + |psi(a)| must fail submultiplicativity.
    """

    def __init__(self, values: dict):
        self.values = {int(k): (v if isinstance(v, GaussianRational) else gr(v))
                       for k, v in values.items()}

    def eval(self, a: Element) -> GaussianRational:
        total = GaussianRational(0)
        for k, z in a.coeffs.items():
            v = self.values.get(k)
            if v is not None:
                total = total + z * v
        return total

    def label(self) -> str:
        items = ", ".join(f"e{k}: {v!r}" for k, v in sorted(self.values.items()))
        return f"table{{{items}}}"


def find_negative_control(max_den: int = 4, max_num: int = 6, max_coeff: int = 5):
    """Brute-force search for a violating configuration.

    Fixes psi(e2) = 5 on the even-mask pointwise algebra (e2 lies in A^2, so
    psi does not annihilate squares), sweeps psi(e4) over small rationals and
    the witness a = e2 + c e4 over small integer c, and returns the first
    (psi_e4, c) with q(a^2) > q(a)^2 under the l1 base.  Scaling a cannot
    manufacture a violation (both sides are homogeneous of degree 2), so the
    search is over the psi table and the coefficient ratio only.
    """
    spec = MaskedPointwise(Evens())
    for den in range(1, max_den + 1):
        for num in range(-max_num, max_num + 1):
            psi4 = gr(f"{num}/{den}")
            psi = TableFunctional({2: gr(5), 4: psi4})
            q = NormSpec(L1, psi)
            for c in range(1, max_coeff + 1):
                a = element({2: 1, 4: c})
                aa = multiply(spec, a, a)
                lhs = eval_norm(q, aa)
                rhs = eval_norm(q, a) * eval_norm(q, a)
                if lhs.compare_exact(rhs) == 1:
                    return {"psi_e2": gr(5), "psi_e4": psi4, "coeff": c,
                            "q(a^2)": lhs.exact, "q(a)^2": rhs.exact}
    return None


# Frozen output of find_negative_control(): psi = {e2: 5, e4: -1} with
# witness a = b = e2 + 5 e4 gives q(a^2) = 46 > 36 = q(a)^2.
NEGATIVE_CONTROL_PSI = {2: gr(5), 4: gr(-1)}
NEGATIVE_CONTROL_WITNESS = element({2: 1, 4: 5})


def negative_control_check(cfg: SamplerConfig) -> CheckReport:
    """Run the submultiplicativity check against the broken functional.

    The recorded witness pair is injected as the first trial (random pairs
    essentially never land on the violating ray), then sampling proceeds
    normally.  This check MUST report violations; a clean pass means the
    comparator has gone vacuous.
    """
    spec = MaskedPointwise(Evens())
    q = NormSpec(L1, TableFunctional(NEGATIVE_CONTROL_PSI))
    w = NEGATIVE_CONTROL_WITNESS
    report = check_submultiplicative(spec, q, cfg, injected_pairs=[(w, w)])
    report.name = "negative_control"
    return report


# ---------------------------------------------------------------------------
# The suite
# ---------------------------------------------------------------------------

def _pointwise_type(spec: AlgebraSpec) -> bool:
    """Families whose basis products never collide on a target coordinate.

    Only on these are the sup and l2 base norms submultiplicative; on
    convolution-type families (polynomial ideals, C[x]/(x^k), matrix units)
    colliding terms break them, e.g. (1 + x)^2 = 1 + 2x + x^2 has sup norm 2
    against sup(1+x)^2 = 1.  The l1 norm is submultiplicative on every
    in-scope family.
    """
    if isinstance(spec, (MaskedPointwise, ZeroProduct)):
        return True
    if isinstance(spec, TrivialExtension):
        return _pointwise_type(spec.inner)
    return False


def _child(cfg: SamplerConfig, i: int) -> SamplerConfig:
    return SamplerConfig(
        seed=(cfg.seed * 1_000_003 + i) % (2 ** 63),
        trials=cfg.trials,
        max_support=cfg.max_support,
        max_index=cfg.max_index,
        coeff_bound=cfg.coeff_bound,
    )


@dataclass
class SuiteReport:
    cfg: SamplerConfig
    checks: list = field(default_factory=list)
    negative_control: Optional[CheckReport] = None

    @property
    def passed(self) -> bool:
        ok = all(c.passed for c in self.checks)
        if self.negative_control is not None:
            # the control is REQUIRED to fail: a clean control means the
            # comparator has gone vacuous, and the run is rejected either way
            ok = False
        return ok

    @property
    def control_detected(self) -> Optional[bool]:
        if self.negative_control is None:
            return None
        return not self.negative_control.passed

    def to_json(self):
        out = {
            "seed": self.cfg.seed,
            "trials": self.cfg.trials,
            "passed": self.passed,
            "checks": [c.to_json() for c in self.checks],
        }
        if self.negative_control is not None:
            out["negative_control"] = self.negative_control.to_json()
            out["negative_control_detected"] = self.control_detected
        return out

    def human_lines(self):
        lines = []
        for c in self.checks:
            status = "PASS" if c.passed else "FAIL"
            lines.append(f"{status}  {c.name}[{c.subject}]  trials={c.trials}"
                         f"  violations={c.violation_count}")
            for w in c.warnings:
                lines.append(f"      warning: {w}")
        if self.negative_control is not None:
            c = self.negative_control
            status = ("CONTROLLED-FAIL" if self.control_detected
                      else "VACUOUS (control not detected: suite rejected)")
            lines.append(f"{status}  {c.name}[{c.subject}]  trials={c.trials}"
                         f"  violations={c.violation_count}")
        lines.append("suite: " + ("PASS" if self.passed else "FAIL"))
        return lines


def run_suite(cfg: SamplerConfig, negative_control: bool = False,
              families=None) -> SuiteReport:
    """Run every check over the built-in gallery (or the given families).

    families: optional list of (label, AlgebraSpec) pairs; defaults to all
    computable gallery entries.  Submultiplicativity of the sup/l2 bases is
    only asserted on pointwise-type families, where it actually holds.
    """
    from .gallery import list_entries

    if families is None:
        families = [(e.id, e.build({})) for e in list_entries() if not e.symbolic]
    suite = SuiteReport(cfg)
    step = 0
    for label, spec in families:
        step += 1
        vreport = CheckReport("validate", label, 1)
        try:
            validate(spec)
        except NotAssociative as exc:
            vreport.record(0, "associativity", {}, {"witness": str(exc.witness)})
        suite.checks.append(vreport)

        eq = check_theorem_equivalence(spec)
        eq.subject = label
        suite.checks.append(eq)

        functionals = []
        try:
            functionals.append(theorem_phi(spec))
            functionals.append(corollary_phi_n(spec, 1))
        except EmptyComplement:
            pass
        for f in functionals:
            step += 1
            rep = check_kernel_condition(spec, f, _child(cfg, step))
            rep.subject = f"{label}:{f.label()}"
            suite.checks.append(rep)
        phi = functionals[0] if functionals else None
        for base in (L1, SUP, L2):
            step += 1
            norm = NormSpec(base, phi)
            rep = check_norm_axioms(spec, norm, _child(cfg, step))
            rep.subject = f"{label}:{norm.label()}"
            suite.checks.append(rep)
            if base == L1 or _pointwise_type(spec):
                step += 1
                rep = check_submultiplicative(spec, norm, _child(cfg, step))
                rep.subject = f"{label}:{norm.label()}"
                suite.checks.append(rep)
    if negative_control:
        suite.negative_control = negative_control_check(
            _child(cfg, 999_999))
    return suite
