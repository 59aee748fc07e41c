"""Command-line front end.

One subcommand per measure plus verification and export. Measure commands
write one delimited table with a fixed header; --mode picks the computation
route:

* analytic: closed-form divisor arithmetic (for betweenness, the
  common-neighbor pair scan valid at diameter <= 2)
* oracle:   recomputed from explicit stored adjacency (for betweenness,
  Brandes BFS)
* both:     one column per route, for eyeballing agreement

File output is byte-identical across runs and across --jobs settings: work
is split into fixed 2048-node chunks and merged in node order regardless of
worker count.
"""

from __future__ import annotations

import argparse
import functools
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction

from . import __version__, analysis, analytic, graph_oracle
from .backend import backend_name
from .numtheory import SieveTables, build_sieve

CHUNK_NODES = 2048
DEFAULT_MAX_BETWEENNESS = 10_000
MAX_BETWEENNESS_ENV = "DIVNET_MAX_BETWEENNESS_N"
VERIFY_BETWEENNESS_LIMIT = 1000
VERIFY_BETWEENNESS_TOL = 1e-9


@dataclass
class RunConfig:
    """Validated invocation: which command, at what size, via which route."""

    command: str
    size: int = 0
    mode: str = "analytic"
    out: str | None = None
    fmt: str = "csv"
    jobs: int = 1
    exact: bool = False
    k_filter: int | None = None
    sizes: tuple[int, ...] = field(default_factory=tuple)


@dataclass(frozen=True)
class MeasureProfile:
    """Per-node values of one measure along one or both routes.

    Rows are (node, analytic value, oracle value, exact rational), with None
    for whichever slots the mode did not compute.
    """

    measure: str
    rows: list[tuple]


def _fmt_value(v) -> str:
    if v is None:
        return ""
    if isinstance(v, Fraction):
        return str(v)
    if isinstance(v, float):
        return format(v, ".12g")
    return str(v)


def _open_out(out):
    if out in (None, "-"):
        return sys.stdout, False
    return open(out, "w", encoding="ascii", newline="\n"), True


def _write_rows(out: str | None, fmt: str, header: list[str], rows) -> None:
    sep = "," if fmt == "csv" else "\t"
    fh, owned = _open_out(out)
    try:
        fh.write(sep.join(header) + "\n")
        for row in rows:
            fh.write(sep.join(_fmt_value(v) for v in row) + "\n")
    finally:
        if owned:
            fh.close()


def emit_plot_data(profile: MeasureProfile, out, fmt: str = "csv") -> int:
    """Write a profile as a plot-ready table, returning the row count.

    Columns: node, then one numeric column per computed route, then the
    exact rational when the measure has one. Floats carry 12 significant
    digits. Raises on an empty profile.
    """
    if not profile.rows:
        raise ValueError("empty profile")
    _, first_analytic, first_oracle, first_exact = profile.rows[0]
    header = ["n"]
    picks = [0]
    if first_analytic is not None:
        header.append(f"{profile.measure}_analytic")
        picks.append(1)
    if first_oracle is not None:
        header.append(f"{profile.measure}_oracle")
        picks.append(2)
    if first_exact is not None:
        header.append(f"{profile.measure}_exact")
        picks.append(3)
    rows = ([row[i] for i in picks] for row in profile.rows)
    _write_rows(out, fmt, header, rows)
    return len(profile.rows)


@functools.lru_cache(maxsize=4)
def _tables(limit: int) -> SieveTables:
    return build_sieve(limit)


def _clustering_chunk(task: tuple[int, int, int]) -> list[Fraction]:
    size, lo, hi = task
    tables = _tables(size)
    return [analytic.clustering(n, size, tables).value for n in range(lo, hi)]


def _analytic_clustering_values(size: int, jobs: int) -> list[Fraction]:
    """Clustering for nodes 1..size, fanned out over fixed node chunks."""
    if jobs <= 1 or size <= CHUNK_NODES:
        return [Fraction(0)] + _clustering_chunk((size, 1, size + 1))
    tasks = [
        (size, lo, min(lo + CHUNK_NODES, size + 1))
        for lo in range(1, size + 1, CHUNK_NODES)
    ]
    out: list[Fraction] = [Fraction(0)]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        for part in pool.map(_clustering_chunk, tasks):
            out.extend(part)
    return out


def _cap_betweenness(size: int) -> str | None:
    cap = DEFAULT_MAX_BETWEENNESS
    raw = os.environ.get(MAX_BETWEENNESS_ENV)
    if raw is not None:
        try:
            cap = int(raw)
        except ValueError:
            return f"invalid {MAX_BETWEENNESS_ENV}={raw!r}"
    if size > cap:
        return (
            f"betweenness over {size} nodes exceeds the cap of {cap}; "
            f"raise {MAX_BETWEENNESS_ENV} to override"
        )
    return None


def _run_degrees(cfg: RunConfig) -> int:
    tables = _tables(cfg.size)
    want_analytic = cfg.mode in ("analytic", "both")
    want_oracle = cfg.mode in ("oracle", "both")
    analytic_vals = analytic.degree_profile(cfg.size, tables) if want_analytic else None
    oracle_vals = None
    if want_oracle:
        oracle_vals = graph_oracle.degree_profile_oracle(graph_oracle.build_graph(cfg.size))
    rows = [
        (
            n,
            int(analytic_vals[n]) if analytic_vals is not None else None,
            int(oracle_vals[n]) if oracle_vals is not None else None,
            None,
        )
        for n in range(1, cfg.size + 1)
    ]
    emit_plot_data(MeasureProfile("degree", rows), cfg.out, cfg.fmt)
    return 0


def _run_clustering(cfg: RunConfig) -> int:
    want_analytic = cfg.mode in ("analytic", "both")
    want_oracle = cfg.mode in ("oracle", "both")
    analytic_vals = (
        _analytic_clustering_values(cfg.size, cfg.jobs) if want_analytic else None
    )
    oracle_vals = None
    if want_oracle:
        oracle_vals = graph_oracle.clustering_profile_oracle(
            graph_oracle.build_graph(cfg.size)
        )
    exact_source = analytic_vals if analytic_vals is not None else oracle_vals
    rows = [
        (
            n,
            float(analytic_vals[n]) if analytic_vals is not None else None,
            float(oracle_vals[n]) if oracle_vals is not None else None,
            exact_source[n],
        )
        for n in range(1, cfg.size + 1)
    ]
    emit_plot_data(MeasureProfile("clustering", rows), cfg.out, cfg.fmt)
    return 0


def _run_delta(cfg: RunConfig) -> int:
    want_analytic = cfg.mode in ("analytic", "both")
    want_oracle = cfg.mode in ("oracle", "both")
    analytic_vals = (
        _analytic_clustering_values(cfg.size, cfg.jobs) if want_analytic else None
    )
    oracle_vals = None
    if want_oracle:
        oracle_vals = graph_oracle.clustering_profile_oracle(
            graph_oracle.build_graph(cfg.size)
        )
    rows = []
    for n in range(1, cfg.size):
        d_analytic = (
            analytic_vals[n] - analytic_vals[n + 1] if analytic_vals is not None else None
        )
        d_oracle = (
            oracle_vals[n] - oracle_vals[n + 1] if oracle_vals is not None else None
        )
        exact = d_analytic if d_analytic is not None else d_oracle
        rows.append(
            (
                n,
                float(d_analytic) if d_analytic is not None else None,
                float(d_oracle) if d_oracle is not None else None,
                exact,
            )
        )
    emit_plot_data(MeasureProfile("delta", rows), cfg.out, cfg.fmt)
    return 0


def _run_linkdensity(cfg: RunConfig) -> int:
    want_analytic = cfg.mode in ("analytic", "both")
    want_oracle = cfg.mode in ("oracle", "both")
    d_analytic = analytic.link_density(cfg.size) if want_analytic else None
    d_oracle = (
        graph_oracle.link_density_oracle(graph_oracle.build_graph(cfg.size))
        if want_oracle
        else None
    )
    exact = d_analytic if d_analytic is not None else d_oracle
    header = ["n"]
    row = [cfg.size]
    if d_analytic is not None:
        header.append("density_analytic")
        row.append(float(d_analytic))
    if d_oracle is not None:
        header.append("density_oracle")
        row.append(float(d_oracle))
    header.append("density_exact")
    row.append(exact)
    _write_rows(cfg.out, cfg.fmt, header, [row])
    return 0


def _run_betweenness(cfg: RunConfig) -> int:
    message = _cap_betweenness(cfg.size)
    if message:
        print(f"error: {message}", file=sys.stderr)
        return 2
    graph = graph_oracle.build_graph(cfg.size)
    want_analytic = cfg.mode in ("analytic", "both")
    want_oracle = cfg.mode in ("oracle", "both")
    analytic_vals = (
        graph_oracle.betweenness_matrix_profile(graph) if want_analytic else None
    )
    oracle_vals = (
        graph_oracle.betweenness_brandes(graph, exact=False) if want_oracle else None
    )
    exact_vals = None
    if cfg.exact:
        if cfg.size > 2000:
            print(
                "error: --exact betweenness is limited to 2000 nodes",
                file=sys.stderr,
            )
            return 2
        exact_vals = (
            graph_oracle.betweenness_matrix_profile(graph, exact=True)
            if want_analytic
            else graph_oracle.betweenness_brandes(graph, exact=True)
        )
    rows = [
        (
            n,
            float(analytic_vals[n]) if analytic_vals is not None else None,
            float(oracle_vals[n]) if oracle_vals is not None else None,
            exact_vals[n] if exact_vals is not None else None,
        )
        for n in range(1, cfg.size + 1)
    ]
    emit_plot_data(MeasureProfile("betweenness", rows), cfg.out, cfg.fmt)
    return 0


def _run_bands(cfg: RunConfig) -> int:
    rows = [
        (
            band.index,
            band.lo,
            band.hi,
            band.prime_degree,
            float(band.prime_clustering),
            band.prime_clustering,
        )
        for band in analysis.band_decomposition(cfg.size)
    ]
    header = ["band", "lo", "hi", "prime_degree", "prime_clustering", "prime_clustering_exact"]
    _write_rows(cfg.out, cfg.fmt, header, rows)
    return 0


def _run_census(cfg: RunConfig) -> int:
    table = analysis.consecutive_divisor_census(cfg.size, _tables(cfg.size))
    if cfg.k_filter is not None:
        rows = [(cfg.k_filter, table.count(cfg.k_filter))]
    else:
        rows = sorted(table.counts.items())
    _write_rows(cfg.out, cfg.fmt, ["k", "count"], rows)
    return 0


def _run_scaling(cfg: RunConfig) -> int:
    fit = analysis.scaling_fit(cfg.sizes)
    rows = [
        (size, float(density), density)
        for size, density in zip(fit.sizes, fit.densities)
    ]
    _write_rows(cfg.out, cfg.fmt, ["n", "density", "density_exact"], rows)
    print(
        f"fit: slope={fit.slope:.12g} intercept={fit.intercept:.12g} "
        f"residual={fit.residual:.12g} samples={len(fit.sizes)}",
        file=sys.stderr,
    )
    return 0


def _run_export(cfg: RunConfig) -> int:
    graph = graph_oracle.build_graph(cfg.size)
    fh, owned = _open_out(cfg.out)
    try:
        graph_oracle.write_edge_list(graph, fh)
    finally:
        if owned:
            fh.close()
    return 0


def _run_verify(cfg: RunConfig) -> int:
    size = cfg.size
    tables = _tables(size)
    graph = graph_oracle.build_graph(size)
    failures: list[str] = []
    summary_rows = []

    def check(measure: str, pairs) -> None:
        mismatch = next((item for item in pairs if item is not None), None)
        if mismatch is None:
            print(f"verify {measure}: OK ({size} nodes, backend={backend_name()})")
            summary_rows.append((measure, size, ""))
        else:
            n, lhs, rhs = mismatch
            print(
                f"verify {measure}: MISMATCH at n={n}: analytic={lhs} oracle={rhs}"
            )
            failures.append(measure)
            summary_rows.append((measure, size, n))

    deg_analytic = analytic.degree_profile(size, tables)
    deg_oracle = graph_oracle.degree_profile_oracle(graph)
    check(
        "degree",
        (
            None
            if deg_analytic[n] == deg_oracle[n]
            else (n, int(deg_analytic[n]), int(deg_oracle[n]))
            for n in range(1, size + 1)
        ),
    )

    clus_analytic = _analytic_clustering_values(size, cfg.jobs)
    clus_oracle = graph_oracle.clustering_profile_oracle(graph)
    check(
        "clustering",
        (
            None
            if clus_analytic[n] == clus_oracle[n]
            else (n, clus_analytic[n], clus_oracle[n])
            for n in range(1, size + 1)
        ),
    )

    if size >= 2:
        lhs = analytic.link_density(size)
        rhs = graph_oracle.link_density_oracle(graph)
        check("link_density", iter([None if lhs == rhs else (size, lhs, rhs)]))

    if 3 <= size <= VERIFY_BETWEENNESS_LIMIT:
        scan = graph_oracle.betweenness_matrix_profile(graph)
        brandes = graph_oracle.betweenness_brandes(graph, exact=False)
        check(
            "betweenness",
            (
                None
                if abs(float(scan[n]) - float(brandes[n])) <= VERIFY_BETWEENNESS_TOL
                else (n, float(scan[n]), float(brandes[n]))
                for n in range(1, size + 1)
            ),
        )
    elif size > VERIFY_BETWEENNESS_LIMIT:
        print(
            f"verify betweenness: skipped (size {size} above "
            f"{VERIFY_BETWEENNESS_LIMIT}-node verify limit)"
        )

    if cfg.out not in (None, "-"):
        _write_rows(
            cfg.out, cfg.fmt, ["measure", "nodes_checked", "mismatch_node"], summary_rows
        )
    return 1 if failures else 0


_RUNNERS = {
    "degrees": _run_degrees,
    "clustering": _run_clustering,
    "delta": _run_delta,
    "linkdensity": _run_linkdensity,
    "betweenness": _run_betweenness,
    "bands": _run_bands,
    "census": _run_census,
    "scaling": _run_scaling,
    "export-graph": _run_export,
    "verify": _run_verify,
}

_MIN_SIZE = {
    "degrees": 1,
    "clustering": 1,
    "delta": 2,
    "linkdensity": 2,
    "betweenness": 3,
    "bands": 1,
    "census": 2,
    "export-graph": 1,
    "verify": 1,
}


def run(cfg: RunConfig) -> int:
    """Execute a validated configuration; returns the process exit status."""
    if cfg.command != "scaling":
        floor = _MIN_SIZE[cfg.command]
        if cfg.size < floor:
            print(
                f"error: {cfg.command} needs --n >= {floor}, got {cfg.size}",
                file=sys.stderr,
            )
            return 2
    if cfg.jobs < 1:
        print("error: --jobs must be >= 1", file=sys.stderr)
        return 2
    try:
        return _RUNNERS[cfg.command](cfg)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="divnet",
        description=(
            "Divisibility-network analytics: closed-form and brute-force "
            "routes for degrees, link density, clustering, and betweenness."
        ),
    )
    parser.add_argument(
        "--version", action="version", version=f"%(prog)s {__version__}"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(sp, modes=True, jobs=True):
        sp.add_argument("--n", type=int, required=True, help="network size")
        sp.add_argument("--out", default=None, help="output path (default stdout)")
        sp.add_argument("--format", dest="fmt", choices=("csv", "tsv"), default="csv")
        if modes:
            sp.add_argument(
                "--mode",
                choices=("analytic", "oracle", "both"),
                default="analytic",
                help="computation route (default analytic)",
            )
        if jobs:
            sp.add_argument(
                "--jobs", type=int, default=1, help="worker processes (default 1)"
            )

    common(sub.add_parser("degrees", help="per-node degree"))
    common(sub.add_parser("clustering", help="per-node clustering coefficient"))
    common(sub.add_parser("delta", help="clustering difference c(n) - c(n+1)"))
    common(sub.add_parser("linkdensity", help="edge density of the network"))

    bet = sub.add_parser(
        "betweenness",
        help="per-node betweenness (analytic=common-neighbor scan, oracle=BFS)",
    )
    common(bet)
    bet.add_argument(
        "--exact",
        action="store_true",
        help="add exact rational column (sizes up to 2000)",
    )

    common(sub.add_parser("bands", help="floor-value band table"), modes=False, jobs=False)

    census = sub.add_parser(
        "census", help="histogram of consecutive divisor-count differences"
    )
    common(census, modes=False, jobs=False)
    census.add_argument("--k", type=int, default=None, help="report one bucket only")

    scaling = sub.add_parser(
        "scaling", help="log-log link density fit over doubling sizes"
    )
    scaling.add_argument("--nmin", type=int, default=256)
    scaling.add_argument("--nmax", type=int, default=65536)
    scaling.add_argument("--out", default=None)
    scaling.add_argument("--format", dest="fmt", choices=("csv", "tsv"), default="csv")

    common(sub.add_parser("export-graph", help="edge list, one 'i j' line per edge"),
           modes=False, jobs=False)

    verify = sub.add_parser(
        "verify",
        help="cross-check analytic vs oracle per node; exit 1 on any mismatch",
    )
    common(verify, modes=False)

    return parser


def _config_from_args(args) -> RunConfig:
    cfg = RunConfig(command=args.command)
    cfg.size = getattr(args, "n", 0) or 0
    cfg.mode = getattr(args, "mode", "analytic")
    cfg.out = getattr(args, "out", None)
    cfg.fmt = getattr(args, "fmt", "csv")
    cfg.jobs = getattr(args, "jobs", 1)
    cfg.exact = getattr(args, "exact", False)
    cfg.k_filter = getattr(args, "k", None)
    if args.command == "scaling":
        if args.nmin < 2 or args.nmax < args.nmin:
            raise ValueError("need 2 <= nmin <= nmax")
        sizes = []
        n = args.nmin
        while n <= args.nmax:
            sizes.append(n)
            n *= 2
        cfg.sizes = tuple(sizes)
    return cfg


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        cfg = _config_from_args(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    return run(cfg)


if __name__ == "__main__":
    sys.exit(main())
