"""Rank-one Bohr sets, center fitting, triple recovery, and the stability
certificate comparing symmetric-difference distances against the defect."""

from __future__ import annotations

from dataclasses import dataclass

from .circle_sets import IntervalSet, from_segments, interval
from .errors import EtaTooLarge, HypothesisViolated, NotAdmissible, RangeError
from .functionals import admissibility, defect_D, kneser_defect
from .rational import HALF, ONE, Q, ZERO, mod1, rat_str


@dataclass(frozen=True)
class BohrSet:
    """{x : ||n*x - c|| <= rho}: n arcs of length 2*rho/n, total measure 2*rho."""

    degree: int
    center: object
    radius: object

    def __post_init__(self):
        if self.degree < 1:
            raise RangeError("degree must be >= 1")
        object.__setattr__(self, "center", mod1(self.center))
        object.__setattr__(self, "radius", Q(self.radius))
        if not (ZERO <= self.radius <= HALF):
            raise RangeError("radius must be in [0, 1/2]")

    @property
    def measure(self):
        return 2 * self.radius

    def to_set(self) -> IntervalSet:
        return bohr_to_set(self.degree, self.center, self.radius)

    def to_json(self) -> dict:
        return {
            "degree": self.degree,
            "center": rat_str(self.center),
            "radius": rat_str(self.radius),
        }


def bohr_to_set(n, c=None, rho=None) -> IntervalSet:
    """Accepts a BohrSet, or the raw (degree, center, radius) triple."""
    if isinstance(n, BohrSet):
        n, c, rho = n.degree, n.center, n.radius
    c, rho = Q(c), Q(rho)
    if rho <= ZERO:
        return IntervalSet.empty()
    if rho >= HALF:
        return IntervalSet.full()
    return from_segments([(mod1((c - rho + k) / n), 2 * rho / n) for k in range(n)])


@dataclass(frozen=True)
class BohrTriple:
    b1: BohrSet
    b2: BohrSet
    b3: BohrSet

    @property
    def parallel(self) -> bool:
        return self.b1.degree == self.b2.degree == self.b3.degree

    @property
    def compatibly_centered(self) -> bool:
        return self.parallel and self.b3.center == mod1(self.b1.center + self.b2.center)

    @property
    def t_compatibly_centered(self) -> bool:
        return self.parallel and mod1(self.b1.center + self.b2.center + self.b3.center) == ZERO

    def to_json(self) -> dict:
        return {"b1": self.b1.to_json(), "b2": self.b2.to_json(), "b3": self.b3.to_json()}


def _fit_breakpoints(e: IntervalSet, n: int):
    """Candidate shift values (in the 1/n-periodic shift coordinate) at which
    the overlap with the degree-n reference Bohr set can peak."""
    base = bohr_to_set(n, ZERO, e.measure / 2)
    cands = set()
    period = Q(1, n)
    for p in e.endpoints():
        for q in base.endpoints():
            t = mod1(p - q)
            cands.add(t - period * (int(t.numerator) * n // int(t.denominator)))
    return base, sorted(cands)


def best_bohr_fit(e: IntervalSet, n: int):
    """(c, dist): center exactly minimizing m(E symdiff Bohr(n, c, mu/2))."""
    mu = e.measure
    if not (ZERO < mu < ONE):
        raise RangeError("measure must be in (0, 1)")
    base, cands = _fit_breakpoints(e, n)
    best_t, best_ov = ZERO, e.intersect(base).measure
    for t in cands:
        ov = e.intersect(base.translate(t)).measure
        if ov > best_ov or (ov == best_ov and t < best_t):
            best_t, best_ov = t, ov
    return mod1(n * best_t), 2 * (mu - best_ov)


def _overlap_fn(e: IntervalSet, n: int):
    """Returns overlap(c) = m(E intersect Bohr(n,c,mu/2)) plus its candidate
    peak centers, both in the center coordinate c."""
    base, cands = _fit_breakpoints(e, n)
    period = Q(1, n)

    def overlap(c):
        return e.intersect(base.translate(mod1(c) / n)).measure

    centers = sorted({mod1(n * t) for t in cands})
    return overlap, centers


def _argmin_max_pair(f1, f2, breakpoints):
    """Exact minimizer of max(f1, f2) over the circle for 1-periodic piecewise
    linear f1, f2 whose slope changes all lie in `breakpoints`.  Candidates
    are the breakpoints plus the chord crossings inside each linear cell.
    Returns (point, value), smallest point on ties."""
    pts = sorted(set(breakpoints))
    cands = list(pts)
    for i in range(len(pts)):
        p = pts[i]
        q = pts[i + 1] if i + 1 < len(pts) else pts[0] + 1
        if q == p:
            continue
        v1p, v2p = f1(p), f2(p)
        v1q, v2q = f1(mod1(q)), f2(mod1(q))
        d1, d2 = v1q - v1p, v2q - v2p
        if d1 != d2:
            t = p + (v2p - v1p) * (q - p) / (d1 - d2)
            if p < t < q:
                cands.append(mod1(t))
    best = None
    for t in sorted(set(cands)):
        val = max(f1(t), f2(t))
        if best is None or val < best[1]:
            best = (t, val)
    return best


def _side_pieces(f, breaks, t):
    """Linear pieces of the 1-periodic piecewise linear f adjacent to the
    (possibly unreduced) point t, as (slope, intercept, lo, hi) in the
    coordinate of t itself."""
    tm = mod1(t)
    shift = t - tm
    lo = max((b for b in breaks if b <= tm), default=None)
    if lo is None:
        lo = breaks[-1] - 1
    hi = min((b for b in breaks if b > tm), default=None)
    if hi is None:
        hi = breaks[0] + 1
    cells = [(lo, hi)]
    if tm == lo:
        prev = max((b for b in breaks if b < tm), default=None)
        if prev is None:
            prev = breaks[-1] - 1
        cells.append((prev, tm))
    pieces = []
    for u, v in cells:
        if v <= u:
            continue
        fu, fv = f(mod1(u)), f(mod1(v))
        slope = (fv - fu) / (v - u)
        intercept = fu - slope * (u + shift)
        pieces.append((slope, intercept, u + shift, v + shift))
    return pieces


def _balance_polish(fa, fb, fc, ca, cb, cur):
    """One exact jump to the point where the three distances are equal on
    the linear pieces active at (ca, cb); None if no valid improving jump.

    Solves f_a(x) = f_c(x+y) and f_b(y) = f_c(x+y) per active piece combo,
    with f_c's piece expressed in the unreduced x+y coordinate.
    """
    f_a, br_a = fa
    f_b, br_b = fb
    f_c, br_c = fc
    best = None
    for sa, ia, ua, va in _side_pieces(f_a, br_a, ca):
        for sb, ib, ub, vb in _side_pieces(f_b, br_b, cb):
            for sc, ic, uc, vc in _side_pieces(f_c, br_c, ca + cb):
                a11, a12, r1 = sa - sc, -sc, ic - ia
                a21, a22, r2 = -sc, sb - sc, ic - ib
                det = a11 * a22 - a12 * a21
                if det == 0:
                    continue
                x = (r1 * a22 - a12 * r2) / det
                y = (a11 * r2 - r1 * a21) / det
                if not (ua <= x <= va and ub <= y <= vb and uc <= x + y <= vc):
                    continue
                val = sa * x + ia
                if val < cur and (best is None or val < best[2]):
                    best = (mod1(x), mod1(y), val)
    return best


@dataclass(frozen=True)
class RecoveredTriple:
    triple: BohrTriple
    distances: tuple
    degree: int

    def to_json(self) -> dict:
        return {
            "triple": self.triple.to_json(),
            "distances": [rat_str(d) for d in self.distances],
            "degree": self.degree,
        }


def recover_triple(a: IntervalSet, b: IntervalSet, c: IntervalSet,
                   n_max: int = 8, t_oriented: bool = False) -> RecoveredTriple:
    """Best compatibly centered parallel Bohr triple (c_C = c_A + c_B) over
    degrees 1..n_max, minimizing the largest per-set symmetric difference."""
    report = admissibility(a.measure, b.measure, c.measure)
    if not report.admissible:
        raise NotAdmissible("measure triple is not admissible")
    third = c.negate() if t_oriented else c
    best = None
    for n in range(1, n_max + 1):
        ov_a, cands_a = _overlap_fn(a, n)
        ov_b, cands_b = _overlap_fn(b, n)
        ov_c, cands_c = _overlap_fn(third, n)
        mu_a, mu_b, mu_c = a.measure, b.measure, third.measure
        ca, _ = best_bohr_fit(a, n)
        cb, _ = best_bohr_fit(b, n)

        def dists(ca, cb):
            return (
                2 * (mu_a - ov_a(ca)),
                2 * (mu_b - ov_b(cb)),
                2 * (mu_c - ov_c(mod1(ca + cb))),
            )

        def dist_a(c):
            return 2 * (mu_a - ov_a(c))

        def dist_b(c):
            return 2 * (mu_b - ov_b(c))

        def dist_c(c):
            return 2 * (mu_c - ov_c(c))

        cur = max(dists(ca, cb))
        # coordinate descent; each 1-D step minimizes the exact piecewise
        # linear objective over its full breakpoint-and-crossing lattice, so
        # the descent is monotone
        for _ in range(8):
            improved = False
            fixed_b = dist_b(cb)
            pts_a = set(cands_a) | {mod1(p - cb) for p in cands_c}
            na, va = _argmin_max_pair(dist_a, lambda t: dist_c(mod1(t + cb)), pts_a)
            if max(va, fixed_b) < cur:
                ca, cur, improved = na, max(va, fixed_b), True
            fixed_a = dist_a(ca)
            pts_b = set(cands_b) | {mod1(p - ca) for p in cands_c}
            nb, vb = _argmin_max_pair(dist_b, lambda t: dist_c(mod1(ca + t)), pts_b)
            if max(vb, fixed_a) < cur:
                cb, cur, improved = nb, max(vb, fixed_a), True
            if not improved:
                break
        # interior optima balance all three distances inside a linear cell
        # of each; coordinate descent only approaches such points, so finish
        # by solving the active pieces exactly
        for _ in range(4):
            jump = _balance_polish(
                (dist_a, sorted(cands_a)), (dist_b, sorted(cands_b)),
                (dist_c, sorted(cands_c)), ca, cb, cur)
            if jump is None:
                break
            ca, cb, cur = jump
        d = dists(ca, cb)
        entry = (max(d), n)
        if best is None or entry < best[0]:
            cc = mod1(ca + cb)
            triple = BohrTriple(
                BohrSet(n, ca, mu_a / 2),
                BohrSet(n, cb, mu_b / 2),
                BohrSet(n, mod1(-cc) if t_oriented else cc, mu_c / 2),
            )
            best = (entry, RecoveredTriple(triple, tuple(d), n))
        if best[0][0] == ZERO:
            break
    return best[1]


@dataclass(frozen=True)
class StabilityCertificate:
    triple: BohrTriple
    per_set_symdiff: tuple
    defect: object
    ratio_sq: object  # None flags an exact extremizer (defect 0)
    eta_used: object
    degree_searched: int

    @property
    def extremal(self) -> bool:
        return self.defect == ZERO

    def to_json(self) -> dict:
        return {
            "triple": self.triple.to_json(),
            "per_set_symdiff": [rat_str(d) for d in self.per_set_symdiff],
            "defect": rat_str(self.defect),
            "ratio_sq": None if self.ratio_sq is None else rat_str(self.ratio_sq),
            "extremal": self.extremal,
            "eta_used": rat_str(self.eta_used),
            "degree_searched": self.degree_searched,
        }


def stability_certificate(a: IntervalSet, b: IntervalSet, c: IntervalSet,
                          eta, n_max: int = 8) -> StabilityCertificate:
    eta = Q(eta)
    report = admissibility(a.measure, b.measure, c.measure)
    if not report.admissible:
        raise NotAdmissible("measure triple is not admissible")
    if eta > report.eta_strict:
        raise EtaTooLarge(
            f"eta {rat_str(eta)} exceeds the exact maximum {rat_str(report.eta_strict)}"
        )
    defect = defect_D(a, b, c)
    rec = recover_triple(a, b, c, n_max=n_max)
    worst = max(rec.distances)
    ratio_sq = None if defect == ZERO else worst * worst / defect
    return StabilityCertificate(
        triple=rec.triple,
        per_set_symdiff=rec.distances,
        defect=defect,
        ratio_sq=ratio_sq,
        eta_used=eta,
        degree_searched=n_max,
    )


# -- Kneser containment -----------------------------------------------------


def _min_cover(e: IntervalSet, n: int):
    """Smallest degree-n Bohr superset of E: its measure and a BohrSet."""
    image_segs = []
    for left, right in e.segments():
        length = (right - left) * n
        if length >= ONE:
            return ONE, BohrSet(n, ZERO, HALF)
        image_segs.append((mod1(left * n), length))
    image = from_segments(image_segs)
    if image.is_full:
        return ONE, BohrSet(n, ZERO, HALF)
    # the minimal covering interval of the wrapped image is the complement
    # of its largest gap
    gaps = image.complement()
    widest = max(gaps.arcs, key=lambda arc: (arc.length, -arc.left))
    cover_len = ONE - widest.length
    center = mod1(widest.center + HALF)
    return cover_len, BohrSet(n, center, cover_len / 2)


@dataclass(frozen=True)
class KneserContainmentEntry:
    degree: int
    cover_a: BohrSet
    cover_b: BohrSet
    excess: object

    def to_json(self) -> dict:
        return {
            "degree": self.degree,
            "cover_a": self.cover_a.to_json(),
            "cover_b": self.cover_b.to_json(),
            "excess": rat_str(self.excess),
        }


@dataclass(frozen=True)
class KneserContainmentReport:
    entries: tuple
    best: KneserContainmentEntry
    kneser_defect: object
    delta: object  # defect / min measure

    def to_json(self) -> dict:
        return {
            "entries": [e.to_json() for e in self.entries],
            "best": self.best.to_json(),
            "kneser_defect": rat_str(self.kneser_defect),
            "delta": rat_str(self.delta),
        }


def kneser_containment_check(a: IntervalSet, b: IntervalSet,
                             n_max: int = 8) -> KneserContainmentReport:
    if a.is_empty or b.is_empty:
        raise HypothesisViolated("sets must be nonempty")
    if a.measure + b.measure >= ONE:
        raise HypothesisViolated("need m(A) + m(B) < 1")
    kdef = kneser_defect(a, b)
    entries = []
    for n in range(1, n_max + 1):
        len_a, cov_a = _min_cover(a, n)
        len_b, cov_b = _min_cover(b, n)
        entries.append(
            KneserContainmentEntry(
                degree=n,
                cover_a=cov_a,
                cover_b=cov_b,
                excess=(len_a - a.measure) + (len_b - b.measure),
            )
        )
    best = min(entries, key=lambda e: (e.excess, e.degree))
    return KneserContainmentReport(
        entries=tuple(entries),
        best=best,
        kneser_defect=kdef,
        delta=kdef / min(a.measure, b.measure),
    )


# -- perturbation family ----------------------------------------------------


def perturbed_bohr_triple(delta, displacement=Q(1, 16), degree: int = 8,
                          measure=Q(1, 2)):
    """Near-extremal triple: a compatibly centered parallel Bohr triple with
    an edge chunk of measure delta of the first set slid outward by the given
    displacement.  With the defaults the chunk moves from the trailing edge
    of one arc to just outside the leading edge of the next, and the defect
    scales quadratically in delta over most of the sweep range."""
    delta = Q(delta)
    rho = Q(measure) / 2
    base = bohr_to_set(degree, ZERO, rho)
    arc_halfwidth = rho / degree
    if not (ZERO < delta <= 2 * arc_halfwidth):
        raise RangeError("delta must be in (0, arc length]")
    edge = arc_halfwidth  # right edge of the arc centered at 0
    chunk = interval(edge - delta, edge)
    a = base.difference(chunk).union(chunk.translate(displacement))
    return a, base, base
