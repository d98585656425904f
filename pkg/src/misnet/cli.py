"""Command-line front end.

    misnet classify --input graphs.g6 --output out.jsonl [--jobs N] [--resume]
    misnet report --input out.jsonl [--csv out.csv]
    misnet check <problem> (--graph6 G6 | --edges "0-1,1>2") [query flags]

Check subcommands print a JSON verdict on stdout and use the exit-code
contract: 0 = yes, 1 = no, 2 = unknown, 64 = bad input, 70 = internal error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .graphs import DiGraph, Graph6Error, bits, mask_from_str, parse_edge_list, parse_graph6
from .networks import is_permutation
from .decide import (fixes_mis, is_constituency, is_district, is_fixing_set,
                     prefixes_mis, suffixes_mis, ind_fixing_word,
                     dom_fixing_word)
from .permis import is_permis
from .reach import mis_universal
from .kernelfix import kernel_fixable
from .survey import run_classify, summarize, summary_csv, summary_text

EX_YES, EX_NO, EX_UNKNOWN, EX_USAGE, EX_INTERNAL = 0, 1, 2, 64, 70


def _load_graph(args) -> DiGraph:
    if args.graph6:
        return parse_graph6(args.graph6)
    if args.edges:
        return parse_edge_list(args.edges)
    raise ValueError("provide a graph with --graph6 or --edges")


def _parse_set(text: str) -> int:
    text = text.strip()
    if not text:
        return 0
    return bits(int(t) for t in text.split(","))


def _parse_word(text: str) -> tuple[int, ...]:
    text = text.strip()
    if not text:
        return ()
    return tuple(int(t) for t in text.split(","))


def _parse_config(text: str, n: int) -> int:
    text = text.strip()
    if text == "0":
        return 0
    if text == "1":
        return (1 << n) - 1
    if len(text) != n:
        raise ValueError(f"config must be a bit string of length {n} (or 0/1)")
    return mask_from_str(text)


def _emit(answer: str, payload: dict) -> int:
    print(json.dumps({"answer": answer, **payload}, sort_keys=True))
    return {"yes": EX_YES, "no": EX_NO, "unknown": EX_UNKNOWN}[answer]


def _run_check(args) -> int:
    g = _load_graph(args)
    sub = args.problem
    if sub == "constituency":
        ok, cert = is_constituency(g, _parse_set(args.set))
        return _emit("yes" if ok else "no", {"certificate": cert.to_json(g.n)})
    if sub == "district":
        ok, cert = is_district(g, _parse_set(args.set))
        return _emit("yes" if ok else "no", {"certificate": cert.to_json(g.n)})
    if sub == "fixing-word":
        ok, cert = fixes_mis(g, _parse_word(args.word))
        return _emit("yes" if ok else "no", {"certificate": cert.to_json(g.n)})
    if sub == "fixing-set":
        ok, cert = is_fixing_set(g, _parse_set(args.set))
        return _emit("yes" if ok else "no", {"certificate": cert.to_json(g.n)})
    if sub == "permis":
        w = _parse_word(args.word)
        if not is_permutation(g.n, w):
            raise ValueError("--word must be a permutation of all vertices")
        rep = is_permis(g, w)
        payload = {"covered_by_near_transitivity":
                   [v for v in range(g.n) if rep.covered_by_near_transitivity >> v & 1]}
        if not rep.is_permis:
            payload["uncovered_vertex"] = rep.uncovered_vertex
            payload["witness_config"] = "".join(
                "1" if rep.witness_config >> v & 1 else "0" for v in range(g.n))
        return _emit("yes" if rep.is_permis else "no", payload)
    if sub == "universal":
        ok, witness = mis_universal(g, _parse_config(args.config, g.n))
        payload = {}
        if witness is not None:
            payload["unreachable_fixed_point"] = "".join(
                "1" if witness >> v & 1 else "0" for v in range(g.n))
        return _emit("yes" if ok else "no", payload)
    if sub == "prefix":
        ok = prefixes_mis(g, _parse_word(args.word))
        return _emit("yes" if ok else "no", {})
    if sub == "suffix":
        ok, cert = suffixes_mis(g, _parse_word(args.word))
        return _emit("yes" if ok else "no", {"certificate": cert.to_json(g.n)})
    if sub == "kernel-fixable":
        res = kernel_fixable(g)
        payload = {"method": res.method}
        if res.fixing_word is not None:
            payload["fixing_word"] = list(res.fixing_word)
        answer = {"fixable": "yes", "not_fixable": "no", "unknown": "unknown"}[res.status]
        return _emit(answer, payload)
    if sub == "ind-fixing":
        return _emit("yes" if ind_fixing_word(g, _parse_word(args.word)) else "no", {})
    if sub == "dom-fixing":
        return _emit("yes" if dom_fixing_word(g, _parse_word(args.word)) else "no", {})
    raise ValueError(f"unknown check subcommand {sub!r}")


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(prog="misnet", description=__doc__)
    subs = parser.add_subparsers(dest="command", required=True)

    p_classify = subs.add_parser("classify", help="classify a graph6 corpus")
    p_classify.add_argument("--input", required=True)
    p_classify.add_argument("--output", required=True)
    p_classify.add_argument("--jobs", type=int,
                            default=int(os.environ.get("MISNET_JOBS", "1")))
    p_classify.add_argument("--resume", action="store_true")
    p_classify.add_argument("--allow-long", action="store_true",
                            help="permit graphs with >= 9 vertices (hours-scale)")

    p_report = subs.add_parser("report", help="summarize a classification JSONL")
    p_report.add_argument("--input", required=True)
    p_report.add_argument("--csv", default=None)

    p_check = subs.add_parser("check", help="one-off decision procedures")
    p_check.add_argument("problem", choices=[
        "constituency", "district", "fixing-word", "fixing-set", "permis",
        "universal", "prefix", "suffix", "kernel-fixable", "ind-fixing",
        "dom-fixing"])
    p_check.add_argument("--graph6", default=None)
    p_check.add_argument("--edges", default=None)
    p_check.add_argument("--set", default="")
    p_check.add_argument("--word", default="")
    p_check.add_argument("--config", default="0")

    args = parser.parse_args(argv)
    try:
        if args.command == "classify":
            summary = run_classify(args.input, args.output, jobs=args.jobs,
                                   resume=args.resume, allow_long=args.allow_long,
                                   log=sys.stderr)
            print(summary_text(summary))
            return 0
        if args.command == "report":
            summary = summarize(args.input)
            print(summary_text(summary))
            if args.csv:
                with open(args.csv, "w", encoding="utf-8") as fh:
                    fh.write(summary_csv(summary))
            return 0
        return _run_check(args)
    except (Graph6Error, ValueError, FileNotFoundError) as exc:
        print(f"misnet: {exc}", file=sys.stderr)
        return EX_USAGE
    except Exception as exc:  # pragma: no cover
        print(f"misnet: internal error: {exc}", file=sys.stderr)
        return EX_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
