"""Benchmark harness: run enumerators over generated corpora and report CSV rows.

Each row (parameters, seed, algorithm) runs in its own worker process so a
timeout can kill it cleanly.  Rows may run in parallel (``jobs > 1``); the
report keeps corpus order regardless.
"""

from __future__ import annotations

import csv
import json
import multiprocessing as mp
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, fields, replace
from typing import Iterable, Sequence, TextIO

from .generator import GenParams, generate

ALGORITHMS = ("octmib", "lexmib", "dias-uncorrected", "bipartite")
PARAM_COLUMNS = [f.name for f in fields(GenParams) if f.name not in ("seed", "prune_isolates")]
COLUMNS = PARAM_COLUMNS + ["seed", "algorithm", "mib_count", "wall_ms", "timed_out"]
SWEEP_AXES = ("n_o", "density", "d_lr", "d_ob", "d_oo", "cv_lr", "cv_ob", "oct_mode")


@dataclass
class Row:
    params: GenParams
    algorithm: str
    mib_count: int | None = None
    wall_ms: float | None = None
    timed_out: bool = False

    def as_csv(self) -> dict:
        out = {name: getattr(self.params, name) for name in PARAM_COLUMNS}
        out.update(
            seed=self.params.seed,
            algorithm=self.algorithm,
            mib_count="" if self.mib_count is None else self.mib_count,
            wall_ms="" if self.wall_ms is None else f"{self.wall_ms:.3f}",
            timed_out=int(self.timed_out),
        )
        return out


def run_algorithm(params: GenParams, algorithm: str) -> tuple[int, float]:
    """Generate the instance and time one enumerator on it (generation excluded)."""
    from .bipartite import bipartite_masks
    from .lexmib import _lex_masks
    from .octmib import octmib_masks

    g, d = generate(params)
    l, r, o = d.masks()
    start = time.perf_counter()
    if algorithm == "octmib":
        count = sum(1 for _ in octmib_masks(g, l, r, o))
    elif algorithm == "lexmib":
        count = sum(1 for _ in _lex_masks(g, corrected=True))
    elif algorithm == "dias-uncorrected":
        count = sum(1 for _ in _lex_masks(g, corrected=False))
    elif algorithm == "bipartite":
        if o:
            raise ValueError("bipartite enumeration needs n_o = 0")
        count = sum(1 for _ in bipartite_masks(g.masks, l, r))
    else:
        raise ValueError(f"unknown algorithm {algorithm!r}")
    return count, (time.perf_counter() - start) * 1000.0


def _child(conn, params: GenParams, algorithm: str) -> None:
    try:
        conn.send(("ok", run_algorithm(params, algorithm)))
    except Exception as exc:  # reported back to the parent as a failed row
        conn.send(("error", repr(exc)))
    finally:
        conn.close()


def run_row(params: GenParams, algorithm: str, timeout: float | None) -> Row:
    ctx = mp.get_context("fork")
    parent, child = ctx.Pipe(duplex=False)
    proc = ctx.Process(target=_child, args=(child, params, algorithm), daemon=True)
    proc.start()
    child.close()
    row = Row(params, algorithm)
    if parent.poll(timeout):
        status, payload = parent.recv()
        proc.join()
        if status != "ok":
            raise RuntimeError(f"{algorithm} failed on {params}: {payload}")
        row.mib_count, row.wall_ms = payload
    else:
        proc.terminate()
        proc.join()
        row.timed_out = True
        row.wall_ms = None if timeout is None else timeout * 1000.0
    return row


def run_corpus(
    params: Sequence[GenParams],
    algorithms: Sequence[str],
    timeout: float | None = None,
    jobs: int = 1,
) -> list[Row]:
    for algorithm in algorithms:
        if algorithm not in ALGORITHMS:
            raise ValueError(f"unknown algorithm {algorithm!r}; choose from {ALGORITHMS}")
    tasks = [(p, a) for p in params for a in algorithms]
    with ThreadPoolExecutor(max_workers=max(1, jobs)) as pool:
        return list(pool.map(lambda t: run_row(t[0], t[1], timeout), tasks))


def expand_seeds(base: Iterable[GenParams], seeds: Iterable[int]) -> list[GenParams]:
    seeds = list(seeds)
    return [replace(p, seed=s) for p in base for s in seeds]


def sweep(base: GenParams, axis: str, values: Sequence) -> list[GenParams]:
    """One parameter set per value along ``axis``.

    ``density`` moves all three densities together; ``n_o`` under
    ``perfect_matching`` must stay even.
    """
    if axis not in SWEEP_AXES:
        raise ValueError(f"unknown sweep axis {axis!r}; choose from {SWEEP_AXES}")
    out = []
    for value in values:
        if axis == "density":
            v = float(value)
            out.append(replace(base, d_lr=v, d_ob=v, d_oo=v))
        elif axis == "n_o":
            out.append(replace(base, n_o=int(value)))
        elif axis == "oct_mode":
            out.append(replace(base, oct_mode=str(value).replace("-", "_")))
        else:
            out.append(replace(base, **{axis: float(value)}))
    return out


def load_corpus(corpus: dict) -> tuple[list[GenParams], list[str], float | None]:
    """Parse a corpus description.

    ``{"params": [{...GenParams fields...}], "seeds": [...], "algorithms": [...],
    "timeout": seconds}``; an optional ``"sweep": {"axis": ..., "values": [...]}``
    expands every parameter set along that axis.
    """
    base = [GenParams(**p) for p in corpus.get("params", [])]
    if not base:
        raise ValueError("corpus has no parameter sets")
    if "sweep" in corpus:
        base = [q for p in base for q in sweep(p, corpus["sweep"]["axis"], corpus["sweep"]["values"])]
    params = expand_seeds(base, corpus.get("seeds", [0]))
    for p in params:
        p.validate()
    algorithms = list(corpus.get("algorithms", ["octmib", "lexmib"]))
    return params, algorithms, corpus.get("timeout")


def load_corpus_file(path: str) -> tuple[list[GenParams], list[str], float | None]:
    with open(path, encoding="utf-8") as fh:
        return load_corpus(json.load(fh))


def write_csv(rows: Iterable[Row], stream: TextIO) -> None:
    writer = csv.DictWriter(stream, fieldnames=COLUMNS, lineterminator="\n")
    writer.writeheader()
    for row in rows:
        writer.writerow(row.as_csv())
