"""Slope census over every canonical 2-bridge knot in a range of alpha.

Records are computed with the collision DP, never by enumerating
sub-tuples, and are emitted in ascending (alpha, beta) order whatever the
number of worker processes.  Every 97th knot is re-checked with the full
enumeration path and the brute-force oracle.
"""
from __future__ import annotations

import json
import multiprocessing
from dataclasses import asdict, dataclass, fields
from math import gcd
from typing import Callable, Iterable, Iterator, TextIO

from .cf import InvalidKnotError, KnotParams, _euclid, even_sign_diff, fold
from .oracle import verify_bijection
from .slopes import collision_dp, is_superincreasing, knot_report
from .subtuples import is_symmetric

__all__ = [
    "CensusRecord",
    "CensusError",
    "CensusIOError",
    "SPOT_CHECK_EVERY",
    "FIELDS",
    "canonical_representatives",
    "census_record",
    "iter_census",
    "spot_check",
    "format_record",
    "run_census",
    "collision_dp",
]

SPOT_CHECK_EVERY = 97
BLOCK_SIZE = 16


@dataclass(frozen=True)
class CensusRecord:
    alpha: int
    beta: int
    k: int
    num_subtuples: int
    num_distinct_slopes: int
    num_repeated_slopes: int
    has_repeat: bool
    is_superincreasing: bool
    is_symmetric: bool
    slopes: tuple[tuple[int, int], ...]


FIELDS = tuple(f.name for f in fields(CensusRecord))


class CensusError(RuntimeError):
    pass


class CensusIOError(OSError):
    pass


def canonical_representatives(alpha: int) -> list[KnotParams]:
    """One knot per equivalence class with denominator ``alpha``, ascending in beta."""
    if alpha % 2 == 0:
        raise InvalidKnotError("alpha must be odd")
    if alpha < 3:
        raise InvalidKnotError("alpha must be at least 3")
    return [KnotParams(alpha, b) for b in _canonical_betas(alpha)]


def _canonical_betas(alpha: int) -> list[int]:
    out = []
    for b in range(1, alpha // 2 + 1):
        if gcd(alpha, b) == 1 and b <= fold(alpha, pow(b, -1, alpha)):
            out.append(b)
    return out


def _record(alpha: int, beta: int) -> CensusRecord:
    m = _euclid(alpha, beta)
    n0 = even_sign_diff(alpha, beta)
    offset = len(m) % 2 - n0
    hist = collision_dp(m)
    slopes = tuple(sorted((2 * (s + offset), c) for s, c in hist.items()))
    repeated = sum(1 for _, c in slopes if c >= 2)
    return CensusRecord(
        alpha=alpha,
        beta=beta,
        k=len(m),
        num_subtuples=sum(hist.values()),
        num_distinct_slopes=len(slopes),
        num_repeated_slopes=repeated,
        has_repeat=repeated > 0,
        is_superincreasing=is_superincreasing(m),
        is_symmetric=is_symmetric(m),
        slopes=slopes,
    )


def census_record(knot: KnotParams) -> CensusRecord:
    return _record(knot.alpha, knot.beta)


def iter_census(min_alpha: int, max_alpha: int) -> Iterator[CensusRecord]:
    """Records for every canonical knot with min_alpha <= alpha <= max_alpha (serial)."""
    for alpha in _odd_range(min_alpha, max_alpha):
        for b in _canonical_betas(alpha):
            yield _record(alpha, b)


def _odd_range(min_alpha: int, max_alpha: int) -> range:
    if min_alpha < 3 or max_alpha < min_alpha:
        raise ValueError("need 3 <= min_alpha <= max_alpha")
    return range(min_alpha | 1, max_alpha + 1, 2)


def _bool(b: bool) -> str:
    return "true" if b else "false"


def format_record(rec: CensusRecord, fmt: str) -> str:
    """One output line (without newline) in ``csv`` or ``jsonl`` form."""
    if fmt == "csv":
        return ",".join([
            str(rec.alpha), str(rec.beta), str(rec.k), str(rec.num_subtuples),
            str(rec.num_distinct_slopes), str(rec.num_repeated_slopes),
            _bool(rec.has_repeat), _bool(rec.is_superincreasing), _bool(rec.is_symmetric),
            ";".join(f"{s}:{c}" for s, c in rec.slopes),
        ])
    if fmt == "jsonl":
        d = asdict(rec)
        d["slopes"] = [list(p) for p in rec.slopes]
        return json.dumps(d)
    raise ValueError(f"unknown census format {fmt!r}")


def parse_record(line: str, fmt: str) -> CensusRecord:
    if fmt == "jsonl":
        d = json.loads(line)
        d["slopes"] = tuple(tuple(p) for p in d["slopes"])
        return CensusRecord(**d)
    parts = line.rstrip("\n").split(",")
    ints = [int(x) for x in parts[:6]]
    flags = [x == "true" for x in parts[6:9]]
    slopes = tuple(
        (int(s), int(c)) for s, c in (p.split(":") for p in parts[9].split(";") if p)
    )
    return CensusRecord(*ints, *flags, slopes)


def _block(args: tuple[tuple[int, ...], str]) -> tuple[list[tuple[int, int]], list[str], list[int]]:
    """Compute one block of alphas: (knots, rendered lines, per-knot flags)."""
    alphas, fmt = args
    knots, lines, flags = [], [], []
    for alpha in alphas:
        for b in _canonical_betas(alpha):
            rec = _record(alpha, b)
            knots.append((alpha, b))
            lines.append(format_record(rec, fmt))
            flags.append(rec.has_repeat | rec.is_superincreasing << 1 | rec.is_symmetric << 2
                         | rec.num_subtuples << 3)
    return knots, lines, flags


def spot_check(knot: tuple[int, int]) -> str | None:
    """Full-path and oracle cross-check of one knot; returns a failure message or None."""
    kp = KnotParams(*knot)
    rec = _record(*knot)
    full = knot_report(kp, mode="full")
    if tuple(full.slope_counts()) != rec.slopes:
        return f"K{knot}: full-mode slopes {full.slope_counts()} != DP slopes {list(rec.slopes)}"
    check = verify_bijection(kp)
    if not check:
        return f"K{knot}: oracle mismatch, missing={check.missing[:3]} extra={check.extra[:3]}"
    return None


def _blocks(min_alpha: int, max_alpha: int, fmt: str) -> list[tuple[tuple[int, ...], str]]:
    alphas = tuple(_odd_range(min_alpha, max_alpha))
    return [(alphas[i:i + BLOCK_SIZE], fmt) for i in range(0, len(alphas), BLOCK_SIZE)]


def run_census(
    min_alpha: int,
    max_alpha: int,
    workers: int = 1,
    sink: TextIO | None = None,
    fmt: str = "csv",
    spot_every: int = SPOT_CHECK_EVERY,
    progress: Callable[[int], None] | None = None,
) -> dict:
    """Run the census, writing records to ``sink`` and returning a summary dict.

    The bytes written depend only on the alpha range and format.  Raises
    :class:`CensusError` if any spot check fails and :class:`CensusIOError`
    if the sink cannot be written.
    """
    if fmt not in ("csv", "jsonl"):
        raise ValueError(f"unknown census format {fmt!r}")
    blocks = _blocks(min_alpha, max_alpha, fmt)
    totals = dict(knots=0, with_repeat=0, superincreasing=0, symmetric=0, subtuples=0)
    samples: list[tuple[int, int]] = []

    def write(text: str, position: int) -> None:
        if sink is None:
            return
        try:
            sink.write(text)
        except OSError as exc:
            raise CensusIOError(f"failed writing record {position}: {exc}") from exc

    pool = multiprocessing.Pool(workers) if workers > 1 else None
    try:
        results: Iterable = pool.imap(_block, blocks) if pool else map(_block, blocks)
        if fmt == "csv":
            write(",".join(FIELDS) + "\n", 0)
        for knots, lines, flags in results:
            pos = totals["knots"]
            for i, f in enumerate(flags):
                if (pos + i) % spot_every == 0:
                    samples.append(knots[i])
                totals["with_repeat"] += f & 1
                totals["superincreasing"] += f >> 1 & 1
                totals["symmetric"] += f >> 2 & 1
                totals["subtuples"] += f >> 3
            if lines:
                write("\n".join(lines) + "\n", pos + 1)
            totals["knots"] += len(lines)
            if progress:
                progress(totals["knots"])
        checks = pool.imap(spot_check, samples, chunksize=32) if pool else map(spot_check, samples)
        for failure in checks:
            if failure is not None:
                raise CensusError(f"spot check failed: {failure}")
    finally:
        if pool is not None:
            pool.terminate()
            pool.join()

    n = totals["knots"]
    return {
        "min_alpha": min_alpha,
        "max_alpha": max_alpha,
        "knots": n,
        "knots_with_repeat": totals["with_repeat"],
        "repeat_fraction": totals["with_repeat"] / n if n else 0.0,
        "superincreasing": totals["superincreasing"],
        "symmetric": totals["symmetric"],
        "subtuples": totals["subtuples"],
        "spot_checks": len(samples),
    }
