"""Resumable, parallel permissibility classification over graph6 corpora.

One JSONL record per input graph. The output file is the checkpoint: on
resume, already-classified graphs are skipped and the final summary is
recomputed from the whole file, so a resumed run and a fresh run print the
same summary.
"""

from __future__ import annotations

import json
import time
from collections import Counter, defaultdict
from typing import Optional, TextIO

from .graphs import Graph6Error, parse_graph6, _decode_number
from .permis import find_permis, is_permis

LONG_RUN_VERTICES = 9  # classification beyond 8 vertices is hours-scale


def peek_vertex_count(line: str) -> int:
    """Vertex count of a well-formed line; 0 when the line is malformed
    (such lines become error records downstream)."""
    try:
        data = line.encode("ascii")
        if data.startswith(b">>graph6<<"):
            data = data[10:]
        elif data.startswith(b">>digraph6<<"):
            data = data[12:]
        if data.startswith(b"&"):
            data = data[1:]
        n, pos = _decode_number(data, 0)
        body = len(data) - pos
        if body != (n * (n - 1) // 2 + 5) // 6 and body != (n * n + 5) // 6:
            return 0
        return n
    except (Graph6Error, UnicodeEncodeError):
        return 0


def classify_line(line: str, exhaustive_limit: int = 12) -> dict:
    """Classify one graph6 line; errors become error records, not crashes."""
    t0 = time.perf_counter()
    try:
        g = parse_graph6(line)
        if not g.undirected:
            raise ValueError("permissibility classification expects graph6 "
                             "(undirected) input")
        res = find_permis(g, exhaustive_limit=exhaustive_limit)
        record = {
            "graph6": line,
            "n": g.n,
            "verdict": res.verdict,
            "permis": list(res.permis) if res.permis is not None else None,
            "method": res.method,
            "elapsed": round(time.perf_counter() - t0, 6),
        }
        if res.verdict == "permissible":
            report = is_permis(g, res.permis)
            if not report.is_permis:  # pragma: no cover - guarded upstream
                raise RuntimeError("stored permis failed re-verification")
        return record
    except (Graph6Error, ValueError, RuntimeError) as exc:
        return {
            "graph6": line,
            "verdict": "error",
            "error": str(exc),
            "elapsed": round(time.perf_counter() - t0, 6),
        }


def _read_lines(path: str) -> list[str]:
    lines = []
    with open(path, "r", encoding="ascii") as fh:
        for raw in fh:
            raw = raw.strip()
            if raw and not raw.startswith("#"):
                lines.append(raw)
    return lines


def _load_done(path: str) -> set[str]:
    done = set()
    try:
        with open(path, "r", encoding="utf-8") as fh:
            for raw in fh:
                raw = raw.strip()
                if not raw:
                    continue
                try:
                    rec = json.loads(raw)
                except json.JSONDecodeError:
                    continue
                if rec.get("verdict") in ("permissible", "non_permissible",
                                          "unknown", "error"):
                    done.add(rec["graph6"])
    except FileNotFoundError:
        pass
    return done


def run_classify(input_path: str, output_path: str, jobs: int = 1,
                 resume: bool = False, allow_long: bool = False,
                 log: Optional[TextIO] = None) -> dict:
    """Classify every graph in the input file, appending JSONL records.

    Returns the summary dict (also derivable via `summarize`). Work is
    farmed to a process pool when jobs > 1; records may arrive in any order
    but verdicts are independent of the worker count.
    """
    lines = _read_lines(input_path)
    big = [ln for ln in lines if peek_vertex_count(ln) >= LONG_RUN_VERTICES]
    if big and not allow_long:
        raise ValueError(
            f"{len(big)} graphs have >= {LONG_RUN_VERTICES} vertices; "
            f"a full 9-vertex survey is hours-scale. Re-run with --allow-long.")
    if big and log:
        print(f"warning: {len(big)} graphs with >= {LONG_RUN_VERTICES} "
              f"vertices; expect an hours-scale run", file=log)
    done = _load_done(output_path) if resume else set()
    pending = [ln for ln in lines if ln not in done]
    mode = "a" if resume else "w"
    with open(output_path, mode, encoding="utf-8") as out:
        if jobs > 1:
            from multiprocessing import get_context
            ctx = get_context("fork")
            with ctx.Pool(jobs) as pool:
                for i, rec in enumerate(
                        pool.imap_unordered(classify_line, pending, chunksize=16)):
                    out.write(json.dumps(rec, sort_keys=True) + "\n")
                    if i % 64 == 63:
                        out.flush()
        else:
            for i, ln in enumerate(pending):
                out.write(json.dumps(classify_line(ln), sort_keys=True) + "\n")
                if i % 64 == 63:
                    out.flush()
    return summarize(output_path)


def summarize(jsonl_path: str) -> dict:
    """Per-n counts plus method histogram, recomputed from the record file."""
    rows: dict[int, Counter] = defaultdict(Counter)
    methods: Counter = Counter()
    errors = 0
    corrupt = 0
    with open(jsonl_path, "r", encoding="utf-8") as fh:
        for raw in fh:
            raw = raw.strip()
            if not raw:
                continue
            try:
                rec = json.loads(raw)
            except json.JSONDecodeError:
                corrupt += 1
                continue
            verdict = rec.get("verdict")
            if verdict == "error":
                errors += 1
                continue
            if verdict not in ("permissible", "non_permissible", "unknown"):
                corrupt += 1
                continue
            rows[rec["n"]][verdict] += 1
            methods[rec.get("method", "?")] += 1
    table = {
        n: {
            "total": sum(c.values()),
            "permissible": c["permissible"],
            "non_permissible": c["non_permissible"],
            "unknown": c["unknown"],
        }
        for n, c in sorted(rows.items())
    }
    return {"per_n": table, "methods": dict(sorted(methods.items())),
            "errors": errors, "corrupt": corrupt,
            "total": sum(r["total"] for r in table.values())}


def summary_text(summary: dict) -> str:
    """Deterministic aligned table for a summary dict."""
    header = f"{'n':>3} {'total':>8} {'permissible':>12} {'non-permissible':>16} {'unknown':>8}"
    lines = [header, "-" * len(header)]
    for n, row in summary["per_n"].items():
        lines.append(f"{n:>3} {row['total']:>8} {row['permissible']:>12} "
                     f"{row['non_permissible']:>16} {row['unknown']:>8}")
    lines.append(f"graphs: {summary['total']}  errors: {summary['errors']}  "
                 f"corrupt: {summary['corrupt']}")
    lines.append("methods: " + ", ".join(
        f"{k}={v}" for k, v in summary["methods"].items()))
    return "\n".join(lines)


def summary_csv(summary: dict) -> str:
    lines = ["n,total,permissible,non_permissible,unknown"]
    for n, row in summary["per_n"].items():
        lines.append(f"{n},{row['total']},{row['permissible']},"
                     f"{row['non_permissible']},{row['unknown']}")
    return "\n".join(lines) + "\n"
