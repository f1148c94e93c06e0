"""Command line front end.

A job is described by flags or by a key=value job file (flags win):

    ring = k<a,b,c,d>          # or k[x,y,z] / x,y,z for commutative rings
    field = Q                  # or Fp(7)
    order = deglex weights=9,4,1,0 precedence=b,d,a,c
    gens = a*c - b^2; c*a - b^2
    task = poincare
    max-hdeg = 5
    max-deg = 10

Exit status: 0 success, 1 a verification check failed, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import re
import sys
from dataclasses import dataclass, field as dc_field

from .bar import (BarContext, FLAVORS, FlavorError, _materialize, _standard_by_degree, _tuples,
                  bar_matching, build_resolution, path_sum_cross_check, type_ii_possible)
from .catalog import CATALOG
from .closed_forms import is_complete_intersection
from .complexes import check_boundary_squared
from .groebner import IncompleteBasisError, ReductionSystem, buchberger, noncomm_complete
from .hochschild import hh_hilbert, hh_series, hochschild_resolution
from .monomials import MonomialOrder
from .morse import validate_matching
from .oracle import UngradedAlgebra, find_grading, tor_residue_field
from .parsing import ParseError, parse_generators
from .polynomials import PolyRing
from .scalars import Field
from .series import (BettiTable, UnsupportedSystem, automaton_series, build_automaton, chain_table,
                     closed_form_series, commutative_upper_bound, resolution_betti)

TASKS = ("groebner", "resolve", "betti", "poincare", "hochschild", "verify")
DEFAULT_D = 5
DEFAULT_d = 10


class UsageError(ValueError):
    pass


@dataclass
class JobSpec:
    task: str = "betti"
    ring: str | None = None
    field: str = "Q"
    order: str = "deglex"
    gens: list = dc_field(default_factory=list)
    gens_text: str = ""
    example: str | None = None
    max_hdeg: int = DEFAULT_D
    max_deg: int = DEFAULT_d
    flavor: str | None = None
    dump_complex: bool = False
    fmt: str = "text"
    figure: str | None = None


# parsing the job

def parse_ring(text: str):
    """``k[x,y]``, ``[x,y]`` or ``x,y`` (commutative); ``k<a,b>`` or ``<a,b>`` (words)."""
    s = text.strip()
    m = re.fullmatch(r"(?:[A-Za-z]*)\s*([\[<])(.*)([\]>])", s)
    if m:
        if (m.group(1), m.group(3)) not in (("[", "]"), ("<", ">")):
            raise UsageError(f"unbalanced brackets in ring {text!r}")
        commutative, body = m.group(1) == "[", m.group(2)
    else:
        commutative, body = True, s
    names = [v.strip() for v in body.replace(" ", ",").split(",") if v.strip()]
    if not names:
        raise UsageError(f"ring {text!r} has no variables")
    for v in names:
        if not re.fullmatch(r"[A-Za-z_][A-Za-z_0-9]*", v):
            raise UsageError(f"bad variable name {v!r}")
    return names, commutative


def parse_order(text: str, names) -> MonomialOrder:
    """``deglex`` or ``degrevlex``, optionally followed by ``weights=...`` and
    ``precedence=...`` (variable names from largest to smallest)."""
    parts = text.replace(":", " ").split()
    if not parts:
        raise UsageError("empty order")
    kind, weights, precedence = parts[0], None, None
    for p in parts[1:]:
        key, _, value = p.partition("=")
        items = [v for v in value.split(",") if v]
        if key == "weights":
            try:
                weights = tuple(int(v) for v in items)
            except ValueError:
                raise UsageError(f"weights must be integers: {value!r}") from None
        elif key == "precedence":
            try:
                precedence = tuple(names.index(v) for v in items)
            except ValueError:
                raise UsageError(f"precedence names unknown variables: {value!r}") from None
        else:
            raise UsageError(f"unknown order option {key!r}")
    try:
        return MonomialOrder(kind, weights=weights, precedence=precedence)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def read_job_file(path: str) -> dict:
    out = {}
    with open(path, encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise UsageError(f"{path}:{lineno}: expected key = value")
            key, value = (s.strip() for s in line.split("=", 1))
            key = key.replace("_", "-")
            if key == "gens":
                out.setdefault("gens", []).append(value)
            else:
                out[key] = value
    return out


def _truthy(value) -> bool:
    return str(value).strip().lower() in ("1", "true", "yes", "on")


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="admt", description="Gröbner bases, Morse-reduced Bar resolutions, Betti numbers "
                                 "and Poincaré-Betti series of graded algebras.")
    p.add_argument("job", nargs="?", help="key=value job file")
    p.add_argument("--task", choices=TASKS)
    p.add_argument("--ring", help="k[x,y] (commutative) or k<x,y> (free algebra quotient)")
    p.add_argument("--field", help="Q or Fp(p)")
    p.add_argument("--order", help="deglex | degrevlex [weights=...] [precedence=...]")
    p.add_argument("--gens-file", help="file with one generator per line")
    p.add_argument("--gens", help="generators separated by ';'")
    p.add_argument("--example", choices=sorted(CATALOG), help="use a built-in algebra")
    p.add_argument("--max-hdeg", type=int, help=f"homological bound D (default {DEFAULT_D})")
    p.add_argument("--max-deg", type=int, help=f"internal degree bound d (default {DEFAULT_d})")
    p.add_argument("--flavor", choices=FLAVORS)
    p.add_argument("--dump-complex", action="store_true", help="print every differential entry")
    p.add_argument("--format", choices=("text", "records"), dest="fmt")
    p.add_argument("--figure", help="write a Betti-table heat map to this file")
    return p


def job_from_args(args) -> JobSpec:
    job = JobSpec()
    values = read_job_file(args.job) if args.job else {}
    parts = values.pop("gens", [])
    if "gens-file" in values:
        parts.append(_read(values.pop("gens-file")))
    for key, value in values.items():
        attr = {"format": "fmt"}.get(key, key.replace("-", "_"))
        if not hasattr(job, attr) or attr in ("gens", "gens_text"):
            raise UsageError(f"unknown job key {key!r}")
        setattr(job, attr, value)
    for attr in ("task", "ring", "field", "order", "example", "max_hdeg", "max_deg", "flavor",
                 "fmt", "figure"):
        v = getattr(args, attr)
        if v is not None:
            setattr(job, attr, v)
    if args.dump_complex:
        job.dump_complex = True
    if args.gens_file:
        parts.append(_read(args.gens_file))
    if args.gens:
        parts.append(args.gens)
    job.gens_text = "\n".join(p for p in parts if p.strip())
    job.dump_complex = _truthy(job.dump_complex)
    try:
        job.max_hdeg, job.max_deg = int(job.max_hdeg), int(job.max_deg)
    except ValueError:
        raise UsageError("bounds must be integers") from None
    if job.max_hdeg < 1 or job.max_deg < 1:
        raise UsageError("bounds must be positive")
    if job.task not in TASKS:
        raise UsageError(f"unknown task {job.task!r}; choose from {', '.join(TASKS)}")
    if job.fmt not in ("text", "records"):
        raise UsageError(f"unknown format {job.fmt!r}")
    if job.flavor is not None and job.flavor not in FLAVORS:
        raise UsageError(f"unknown flavor {job.flavor!r}")
    if job.example is None and job.ring is None:
        raise UsageError("give --ring (and generators) or --example")
    return job


def _read(path: str) -> str:
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def system_for(job: JobSpec) -> ReductionSystem:
    if job.example is not None:
        if job.example not in CATALOG:
            raise UsageError(f"unknown example {job.example!r}")
        field_ = Field.parse(job.field)
        R = CATALOG[job.example]()
        if field_ != R.ring.field:
            raise UsageError("built-in examples are defined over Q")
        return R
    names, commutative = parse_ring(job.ring)
    try:
        field_ = Field.parse(job.field)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    ring = PolyRing(names, commutative, field_, parse_order(job.order, names))
    polys = parse_generators(job.gens_text, ring)
    if commutative:
        return buchberger(polys, ring=ring)
    if polys and job.max_deg < max(g.degree for g in polys):
        raise UsageError("--max-deg is below the generator degrees")
    return noncomm_complete(polys, degree_bound=job.max_deg, ring=ring)


# output

class Report:
    """Collects text lines or records; both render deterministically."""

    def __init__(self, fmt: str):
        self.fmt = fmt
        self.lines = []

    def text(self, line: str = ""):
        if self.fmt == "text":
            self.lines.append(line)

    def record(self, tag: str, /, **fields):
        if self.fmt == "records":
            body = " ".join(f"{k}={_record_value(v)}" for k, v in fields.items())
            self.lines.append(f"{tag} {body}".rstrip())

    def both(self, line: str, tag: str, /, **fields):
        self.text(line)
        self.record(tag, **fields)

    def render(self) -> str:
        return "\n".join(self.lines) + "\n"


def _record_value(v) -> str:
    if isinstance(v, (tuple, list)):
        return ",".join(str(a) for a in v)
    return str(v).replace(" ", "")


def header(rep: Report, job: JobSpec, R: ReductionSystem):
    bound = "all" if R.fully_complete else R.complete_up_to_degree
    rep.text(f"# task: {job.task}")
    rep.text(f"# ring: {R.ring.describe()}  order: {R.ring.order.describe()}")
    rep.text(f"# bounds: D={job.max_hdeg} d={job.max_deg}  (defaults D={DEFAULT_D} d={DEFAULT_d})")
    rep.text(f"# groebner basis complete to degree: {bound}")
    rep.record("job", task=job.task, ring=R.ring.describe(), order=R.ring.order.describe(),
               D=job.max_hdeg, d=job.max_deg, complete=bound)


def betti_section(rep: Report, table: BettiTable, label: str):
    rep.text(f"{label}:")
    for line in table.format_text().splitlines():
        rep.text("  " + line)
    rep.text("  totals: " + " ".join(str(v) for v in table.totals().values()))
    for i, g, k in table.rows():
        rep.record("betti", source=label.replace(" ", "-"), i=i, grade=g, rank=k)


def dump_section(rep: Report, res):
    fmt = res.format_cell
    rep.text("differential:")
    for line in res.complex.dump(fmt).splitlines():
        rep.text("  " + line)
        rep.record("edge", entry=line.replace(" ", ";"))


# tasks

def task_groebner(job, R, rep):
    for rule in R.describe():
        rep.both(f"  {rule}", "rule", text=rule)
    mingen = [R.ring.format_monomial(m) for m in R.mingen()]
    rep.both("minimal generators of the initial ideal: " + ", ".join(mingen),
             "mingen", monomials=mingen)
    return 0


def task_resolve(job, R, rep):
    res = build_resolution(R, job.flavor, job.max_hdeg, job.max_deg)
    rep.both(f"flavor: {res.flavor}", "flavor", name=res.flavor)
    ranks = res.rank_table()
    rep.both("ranks: " + " ".join(f"{i}:{k}" for i, k in ranks.items()), "ranks",
             values=[ranks[i] for i in sorted(ranks)])
    rep.both(f"minimal: {str(res.minimal).lower()}", "minimal", value=str(res.minimal).lower())
    for i in sorted(ranks):
        cells = [res.format_cell(c) for c in res.cells(i)]
        rep.text(f"  degree {i}: " + " ".join(cells))
    if job.dump_complex:
        dump_section(rep, res)
    return res


def task_betti(job, R, rep):
    res = build_resolution(R, job.flavor, job.max_hdeg, job.max_deg)
    rep.both(f"minimal: {str(res.minimal).lower()}", "minimal", value=str(res.minimal).lower())
    table = resolution_betti(res)
    betti_section(rep, table, "betti")
    if job.dump_complex:
        dump_section(rep, res)
    return table


def task_poincare(job, R, rep):
    D, d = job.max_hdeg, job.max_deg
    names = R.ring.names
    if not R.ring.commutative:
        try:
            S = automaton_series(build_automaton(R))
        except UnsupportedSystem as exc:
            rep.both(f"no finite automaton: {exc}", "note", text="truncated")
            table = chain_table(R, D, d)
            betti_section(rep, table, "chain counts")
            return table
        rep.both("series: " + S.format(names), "series", value=S.format(names))
        table = S.truncate(d, D)
        betti_section(rep, table, "series coefficients")
        return table
    if is_complete_intersection(R):
        S = closed_form_series("complete-intersection", R.ring.n, [tuple(m) for m in R.mingen()])
        rep.both("series (complete intersection): " + S.format(names), "series",
                 value=S.format(names), kind="complete-intersection")
        table = S.truncate(d, D)
        betti_section(rep, table, "series coefficients")
        return table
    S = commutative_upper_bound(R, D, d)
    rep.both("upper bound: " + S.format(names), "series", value=S.format(names), kind="upper-bound")
    rep.text(f"  (valid for homological degree <= {D} and internal degree <= {d})")
    res = build_resolution(R, job.flavor, D, d)
    rep.both(f"minimal: {str(res.minimal).lower()}", "minimal", value=str(res.minimal).lower())
    table = resolution_betti(res)
    betti_section(rep, table, "betti")
    return table


def task_hochschild(job, R, rep):
    res = hochschild_resolution(R, job.flavor, job.max_hdeg, job.max_deg)
    rep.both(f"minimal: {str(res.minimal).lower()}", "minimal", value=str(res.minimal).lower())
    table = hh_hilbert(res)
    betti_section(rep, table, "hochschild")
    if is_complete_intersection(R):
        S = hh_series(R)
        rep.both("series: " + S.format(R.ring.names), "series", value=S.format(R.ring.names))
    if job.dump_complex:
        dump_section(rep, res)
    return table


def verification_checks(R: ReductionSystem, D: int, d: int, flavor=None):
    """(name, ok, detail) for each stage; later stages still run after a failure."""
    out = []

    def stage(name, fn):
        try:
            ok, detail = fn()
        except (AssertionError, ValueError, ArithmeticError) as exc:
            ok, detail = False, f"{type(exc).__name__}: {exc}"
        out.append((name, ok, detail))
        return ok

    ctx = BarContext(R, flavor)
    state = {}

    def matching():
        B = _materialize(ctx, _tuples(_standard_by_degree(R, d), D + 1, d), "normalized bar")
        rep = validate_matching(B, bar_matching(B, ctx))
        return bool(rep), "acyclic, one edge per cell" if rep else str(rep)

    def squared():
        res = build_resolution(R, ctx.flavor, D, d, check=False)
        state["res"] = res
        bc = check_boundary_squared(res.complex)
        return bool(bc), "d^2 = 0" if bc else f"nonzero on {res.format_cell(bc.cell)}"

    def path_sum():
        path_sum_cross_check(state["res"])
        return True, "reduction differential = path-sum differential"

    def oracle():
        res = state["res"]
        _, weights = find_grading(R)
        top = D if res.minimal else D - 1
        found = resolution_betti(res, top).collapse(weights)
        tor = tor_residue_field(R, top, d)
        expected = BettiTable.from_counts(tor.entries)
        cap = d * min(weights) if weights else d
        found, expected = found.restrict(top, cap), expected.restrict(top, cap)
        if found == expected:
            return True, f"Tor dims agree up to i={top}: " + _totals(expected)
        return False, f"resolution {_totals(found)} vs oracle {_totals(expected)}"

    def series():
        if not R.ring.commutative:
            if not R.fully_complete:
                return True, "skipped: no finite Gröbner basis"
            S = automaton_series(build_automaton(R))
            ok = S.truncate(d, D) == chain_table(R, D, d)
            return ok, "automaton series = chain counts" if ok else "automaton series differs"
        _, weights = find_grading(R)
        res = state["res"]
        top = D if res.minimal else D - 1
        cap = d * min(weights) if weights else d
        bound = commutative_upper_bound(R, D, d).truncate(d, D)
        bound = bound.collapse(weights).restrict(top, cap)
        actual = resolution_betti(res).collapse(weights).restrict(top, cap)
        if res.minimal:
            ok = bound == actual
            return ok, "upper bound is attained" if ok else "minimal but bound not attained"
        ok = actual.dominated_by(bound)
        return ok, "upper bound dominates the Betti table" if ok else "bound violated"

    stage("matching", matching)
    if stage("boundary-squared", squared):
        stage("path-sum", path_sum)
        stage("oracle", oracle)
        stage("series", series)
    return out


def _totals(table: BettiTable) -> str:
    return ",".join(str(v) for v in table.totals().values())


def task_verify(job, R, rep):
    checks = verification_checks(R, job.max_hdeg, job.max_deg, job.flavor)
    failed = [c for c in checks if not c[1]]
    for name, ok, detail in checks:
        rep.both(f"{'PASS' if ok else 'FAIL'} {name}: {detail}", "check", name=name,
                 status="pass" if ok else "fail")
    possible, _ = type_ii_possible(R, job.flavor, job.max_hdeg, job.max_deg)
    rep.both(f"type II reduction possible: {str(possible).lower()}", "type-ii",
             value=str(possible).lower())
    summary = "pass" if not failed else "fail"
    rep.both(f"result: {summary}" + (f" (first failure: {failed[0][0]})" if failed else ""),
             "result", status=summary, first_failure=failed[0][0] if failed else "none")
    return 1 if failed else 0


RUNNERS = {"groebner": task_groebner, "resolve": task_resolve, "betti": task_betti,
           "poincare": task_poincare, "hochschild": task_hochschild, "verify": task_verify}


def run(job: JobSpec) -> tuple[int, str]:
    """Run one job; returns (exit status, report text)."""
    R = system_for(job)
    rep = Report(job.fmt)
    header(rep, job, R)
    result = RUNNERS[job.task](job, R, rep)
    status = result if isinstance(result, int) else 0
    if job.figure:
        from .plotting import plot_betti_table
        table = result if isinstance(result, BettiTable) else None
        if table is None:
            table = resolution_betti(build_resolution(R, job.flavor, job.max_hdeg, job.max_deg))
        plot_betti_table(table, job.figure, title=R.ring.describe())
        rep.both(f"figure written to {job.figure}", "figure", path=job.figure)
    return status, rep.render()


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        job = job_from_args(args)
        status, text = run(job)
    except ParseError as exc:
        print(f"error: parse error at line {exc.line}, column {exc.column}: {exc.message}",
              file=sys.stderr)
        return 2
    except IncompleteBasisError as exc:
        print(f"error: incomplete Gröbner basis: {exc}", file=sys.stderr)
        return 2
    except (UsageError, FlavorError, UnsupportedSystem, UngradedAlgebra) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    sys.stdout.write(text)
    return status


if __name__ == "__main__":
    sys.exit(main())
