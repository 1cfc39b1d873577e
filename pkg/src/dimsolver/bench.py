"""Benchmark runner: drives both exact solvers over a corpus directory and
checks the enumeration-size guarantees against the recorded stats.

For every instance the dominating-set solver must explore at most 2^|D|
roots and, per root, at most 2^q branch leaves where q is the number of
unpaired black vertices left after its forced reductions and q never
exceeds min(|D|, ceil(n/3)). The independent-set solver must see at most
3^ceil(n/3) maximal independent sets. Both must agree on existence and
minimum weight. Any breach lands in the report's violation list instead
of raising mid-run, so one bad instance cannot hide the rest.

Timings use perf_counter and are the one non-reproducible column.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from pathlib import Path
from typing import Optional

from .domset import SolveStats, find_dominating_set, solve_domset
from .graph import format_weight, parse_graph, preprocess
from .mis import solve_mis


@dataclass(frozen=True)
class BenchRow:
    name: str
    n: int
    m: int
    d_size: int
    roots: int
    leaves: int
    mis_count: int
    weight: Optional[float]
    domset_seconds: float
    mis_seconds: float


@dataclass(frozen=True)
class BenchReport:
    rows: tuple[BenchRow, ...]
    violations: tuple[str, ...]

    def to_tsv(self) -> str:
        header = (
            "name\tn\tm\td\troots\tleaves\tmu\tweight\tt_domset\tt_mis"
        )
        lines = [header]
        for r in self.rows:
            weight = format_weight(r.weight) if r.weight is not None else "NODIM"
            lines.append(
                f"{r.name}\t{r.n}\t{r.m}\t{r.d_size}\t{r.roots}\t{r.leaves}"
                f"\t{r.mis_count}\t{weight}\t{r.domset_seconds:.6f}\t{r.mis_seconds:.6f}"
            )
        for v in self.violations:
            lines.append(f"# VIOLATION\t{v}")
        return "\n".join(lines) + "\n"


def _check_bounds(name: str, res_n: int, d_size: int, stats: SolveStats,
                  mis_count: int, out: list[str]) -> None:
    cap = min(d_size, (res_n + 2) // 3)
    if stats.roots_explored > (1 << d_size):
        out.append(f"{name}: explored {stats.roots_explored} roots > 2^{d_size}")
    for i, (leaves, q) in enumerate(
        zip(stats.branch_leaves_per_root, stats.residual_singles_per_root)
    ):
        if q > cap:
            out.append(f"{name}: root {i} kept {q} singles > min(|D|, ceil(n/3)) = {cap}")
        if leaves > (1 << q):
            out.append(f"{name}: root {i} produced {leaves} leaves > 2^{q}")
    mu_cap = 3 ** ((res_n + 2) // 3)
    if mis_count > mu_cap:
        out.append(f"{name}: enumerated {mis_count} maximal independent sets > {mu_cap}")


def run_bench(corpus: str | Path) -> BenchReport:
    """Run both solvers on every *.dim file under corpus, sorted by name."""
    corpus = Path(corpus)
    if not corpus.is_dir():
        raise ValueError(f"corpus {corpus} is not a directory")
    rows: list[BenchRow] = []
    violations: list[str] = []
    for path in sorted(corpus.glob("*.dim")):
        g = parse_graph(path.read_text())
        residual = preprocess(g).residual
        d = find_dominating_set(residual)

        t0 = time.perf_counter()
        dom = solve_domset(residual, d)
        t1 = time.perf_counter()
        mis = solve_mis(residual)
        t2 = time.perf_counter()

        dw = dom.dim.weight if dom.dim is not None else None
        mw = mis.dim.weight if mis.dim is not None else None
        if dw != mw:
            violations.append(f"{path.name}: solvers disagree, domset={dw} mis={mw}")
        _check_bounds(
            path.name, residual.n, len(d), dom.stats, mis.stats.mis_count, violations
        )
        rows.append(
            BenchRow(
                name=path.name,
                n=g.n,
                m=g.m,
                d_size=len(d),
                roots=dom.stats.roots_explored,
                leaves=sum(dom.stats.branch_leaves_per_root),
                mis_count=mis.stats.mis_count,
                weight=dw,
                domset_seconds=t1 - t0,
                mis_seconds=t2 - t1,
            )
        )
    return BenchReport(tuple(rows), tuple(violations))
