"""Lattice scan over invariant boxes, streaming the feasible tuples.

The box is partitioned along d; workers evaluate disjoint slices and the
results are merged back in submission order, so the output is byte-identical
for any worker count and always lexicographic in (d, delta, chi, u, v).
Rows are buffered and written to the sink in one call, so a failed write
leaves no partial output behind.
"""

from __future__ import annotations

import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import product
from typing import Iterator, Tuple

from .constraints import HypothesisConfig, is_feasible
from .invariants import InvariantTuple, Profile, profile

CSV_HEADER = "d,delta,chi,u,v"
CSV_PROFILE_COLUMNS = ("h2k", "hk2", "k3", "hc2", "c3", "KS2", "g",
                       "s1h2", "s20h", "s11h", "s300", "s210", "s111")

_AXES = ("d", "delta", "chi", "u", "v")


def _parse_range(axis: str, value) -> Tuple[int, int]:
    if isinstance(value, int):
        return value, value
    lo, hi = int(value[0]), int(value[1])
    if lo > hi:
        raise ValueError(f"empty range for {axis}: {lo}..{hi}")
    return lo, hi


@dataclass(frozen=True)
class ScanBox:
    """Inclusive integer ranges for each invariant; a fixed value is lo == hi."""

    d: Tuple[int, int]
    delta: Tuple[int, int]
    chi: Tuple[int, int]
    u: Tuple[int, int]
    v: Tuple[int, int]

    @classmethod
    def of(cls, **axes) -> "ScanBox":
        """Build from ints or (lo, hi) pairs, e.g. ``ScanBox.of(d=(1, 2),
        delta=-2, chi=1, u=(1, 2), v=(0, 2))``."""
        missing = [a for a in _AXES if a not in axes]
        if missing:
            raise ValueError(f"missing axes: {missing}")
        extra = [a for a in axes if a not in _AXES]
        if extra:
            raise ValueError(f"unknown axes: {extra}")
        return cls(**{a: _parse_range(a, axes[a]) for a in _AXES})

    @classmethod
    def parse(cls, text: str) -> "ScanBox":
        """Parse ``"d=1..2,delta=-2,chi=1,u=1..2,v=0..2"``."""
        axes = {}
        for chunk in text.split(","):
            if "=" not in chunk:
                raise ValueError(f"bad box component {chunk!r}: expected "
                                 "axis=value or axis=lo..hi")
            name, _, rng = chunk.partition("=")
            name = name.strip()
            if name not in _AXES:
                raise ValueError(f"unknown box axis {name!r}")
            if name in axes:
                raise ValueError(f"duplicate box axis {name!r}")
            rng = rng.strip()
            try:
                if ".." in rng:
                    lo_s, _, hi_s = rng.partition("..")
                    axes[name] = (int(lo_s), int(hi_s))
                else:
                    axes[name] = int(rng)
            except ValueError as exc:
                raise ValueError(f"bad range for {name!r}: {rng!r}") from exc
        return cls.of(**axes)

    def ranges(self):
        return (self.d, self.delta, self.chi, self.u, self.v)

    def volume(self) -> int:
        n = 1
        for lo, hi in self.ranges():
            n *= hi - lo + 1
        return n

    def __iter__(self) -> Iterator[InvariantTuple]:
        spans = [range(lo, hi + 1) for lo, hi in self.ranges()]
        for point in product(*spans):
            yield InvariantTuple(*point)


@dataclass(frozen=True)
class ScanResult:
    scanned: int
    feasible: int


def iter_feasible(box: ScanBox, cfg: HypothesisConfig
                  ) -> Iterator[Tuple[InvariantTuple, Profile]]:
    """Lazily yield each feasible tuple with its profile, in lex order."""
    for t in box:
        if is_feasible(t, cfg):
            yield t, profile(t)


def _format_row(t: InvariantTuple, fmt: str, with_profile: bool) -> str:
    if fmt == "csv":
        cells = [str(x) for x in t]
        if with_profile:
            p = profile(t).to_json_dict()
            cells += [str(p[col]) for col in CSV_PROFILE_COLUMNS]
        return ",".join(cells)
    if fmt == "jsonl":
        d, delta, chi, u, v = t
        record = {"d": d, "delta": delta, "chi": chi, "u": u, "v": v}
        record.update(profile(t).to_json_dict())
        return json.dumps(record)
    raise ValueError(f"unknown scan format {fmt!r}")


def _scan_slice(args) -> Tuple[int, int, list]:
    (d_lo, d_hi), rest, cfg, fmt, with_profile = args
    sub = ScanBox((d_lo, d_hi), *rest)
    scanned = sub.volume()
    rows = []
    for t in sub:
        if is_feasible(t, cfg):
            rows.append(_format_row(t, fmt, with_profile))
    return scanned, len(rows), rows


def _chunks(lo: int, hi: int, parts: int):
    # Split [lo, hi] into at most `parts` contiguous runs of near-equal size.
    count = hi - lo + 1
    parts = max(1, min(parts, count))
    base, extra = divmod(count, parts)
    start = lo
    for i in range(parts):
        size = base + (1 if i < extra else 0)
        yield start, start + size - 1
        start += size


def scan(box: ScanBox, cfg: HypothesisConfig, sink,
         workers: int = 1, fmt: str = "csv",
         with_profile: bool = False,
         header: bool = True) -> ScanResult:
    """Filter the box through the constraint system and write to ``sink``.

    ``fmt`` is ``"csv"`` or ``"jsonl"``; CSV optionally appends profile
    columns.  Output order is lexicographic regardless of ``workers``.
    """
    rest = box.ranges()[1:]
    jobs = [((lo, hi), rest, cfg, fmt, with_profile)
            for lo, hi in _chunks(box.d[0], box.d[1], workers)]

    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=len(jobs)) as pool:
            results = list(pool.map(_scan_slice, jobs))
    else:
        results = [_scan_slice(job) for job in jobs]

    lines = []
    if header and fmt == "csv":
        cols = CSV_HEADER
        if with_profile:
            cols += "," + ",".join(CSV_PROFILE_COLUMNS)
        lines.append(cols)
    scanned = feasible = 0
    for n_scanned, n_feasible, rows in results:
        scanned += n_scanned
        feasible += n_feasible
        lines.extend(rows)

    assert scanned == box.volume()
    payload = "".join(line + "\n" for line in lines)
    sink.write(payload)
    return ScanResult(scanned=scanned, feasible=feasible)
