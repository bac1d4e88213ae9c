"""Command line interface.

Exit codes: 0 on success or a positive answer, 1 when a check fails or the
answer to a yes/no question is no, 2 on malformed or unsupported input.
"""
from __future__ import annotations

import argparse
import json
import sys
from itertools import combinations
from pathlib import Path
from typing import List, Optional, Sequence, Tuple

from .classify import classify_report, g2
from .corpus import corpus, run_corpus
from .dictionary import Dictionary, chain_decomposition, is_antichain, is_code
from .engine import (
    NotAMemberError,
    certify_equal,
    equivalent,
    greedy_decompose,
    included,
    member_lasso,
    minimal_generator,
)
from .formats import FormatError, dump_finite_dictionary, load_dictionary, load_tree
from .rank import Member, e_level, rank_lasso
from .reductions import phi_word, tree_words_max_length
from .streams import Lasso, alpha0
from .words import Alphabet, commutes, format_word, shortlex_key


class UsageError(Exception):
    """Input that is well formed but outside what a verb supports."""


class Report:
    """A verb's result: JSON payload, text rendering and exit code."""

    def __init__(self, payload: dict, text: str, code: int = 0):
        self.payload = payload
        self.text = text
        self.code = code

    def render(self, as_json: bool) -> str:
        if as_json:
            return json.dumps(self.payload, sort_keys=True, indent=2)
        return self.text


# -- helpers ---------------------------------------------------------------


def _dict(path: str) -> Dictionary:
    p = Path(path)
    if not p.is_file():
        raise FormatError(f"no such dictionary file: {path}")
    return load_dictionary(p)


def _finite(d: Dictionary, verb: str) -> Dictionary:
    if not d.is_finite:
        raise UsageError(f"{verb} needs a finite dictionary; {d.label} is infinite")
    return d


def _lasso(text: str) -> Lasso:
    try:
        return Lasso.parse(text)
    except ValueError as err:
        raise FormatError(str(err)) from None


def _check_lasso(d: Dictionary, alpha: Lasso) -> Lasso:
    if any(a >= d.n for a in alpha.head + alpha.cycle):
        raise FormatError(f"lasso {alpha} uses letters outside alphabet of size {d.n}")
    return alpha


def _words(ws) -> List[str]:
    return [format_word(w) for w in ws]


def _yes(b: bool) -> str:
    return "yes" if b else "no"


# -- verbs -----------------------------------------------------------------


def cmd_member(args) -> Report:
    d = _dict(args.dictfile)
    alpha = _check_lasso(d, _lasso(args.lasso))
    ok = member_lasso(d, alpha)
    text = f"{alpha} in A^oo: {_yes(ok)}\n" + (
        "  it factorizes into infinitely many members of A"
        if ok
        else "  no factorization into members of A exists"
    )
    return Report({"dictionary": d.label, "lasso": str(alpha), "member": ok}, text, 0 if ok else 1)


def cmd_classify(args) -> Report:
    d = _finite(_dict(args.dictfile), "classify")
    r = classify_report(d)
    explain = {
        "Empty": "no nonempty member, so A^oo is empty",
        "Full": "every word of the longest member length has a nonempty prefix in A, so A^oo is everything",
        "Clopen": "A^oo is closed (A is finite) and every accepted run reaches a state where it can no longer fail",
        "ClosedNotOpen": "A^oo is closed (A is finite) but some accepted run keeps coming back to states that can still fail",
    }[r.topo]
    text = "\n".join(
        [
            f"class: {r.topo}",
            f"  {explain}",
            f"generated by 0 words: {_yes(r.g0)}",
            f"generated by 1 word: {_yes(r.g1)}" + (f" (witness {format_word(r.g1_witness)})" if r.g1 else ""),
            f"generated by 2 words: {_yes(r.g2)}"
            + (f" (witness {', '.join(_words(r.g2_witness))})" if r.g2 else ""),
            f"rank R(A): {r.rank}",
        ]
    )
    return Report(r.to_json(), text, 0)


def cmd_gclass(args) -> Report:
    d = _finite(_dict(args.dictfile), "gclass")
    r = classify_report(d, max_p=args.max_p, with_rank=False)
    lines = [
        f"G0: {_yes(r.g0)}",
        f"G1: {_yes(r.g1)}" + (f" witness {format_word(r.g1_witness)}" if r.g1 else ""),
        f"G2: {_yes(r.g2)}" + (f" witness {', '.join(_words(r.g2_witness))}" if r.g2 else ""),
    ]
    if r.search is not None:
        s = r.search
        found = f"yes, witness {', '.join(_words(s.witness))}" if s.found else "no prefix witness found"
        lines.append(f"G{args.max_p} search: {found}" + ("" if s.conclusive else " (inconclusive)"))
    payload = r.to_json()
    payload.pop("class", None)
    return Report(payload, "\n".join(lines), 0)


def _equiv_any(a: Dictionary, b: Dictionary) -> Optional[bool]:
    if a.is_finite and b.is_finite:
        return equivalent(a, b)
    for x, y in ((a, b), (b, a)):
        try:
            return certify_equal(x, y)
        except ValueError:
            continue
    return None


def cmd_equiv(args) -> Report:
    a, b = _dict(args.a), _dict(args.b)
    if a.n != b.n:
        raise UsageError("dictionaries use different alphabets")
    ok = _equiv_any(a, b)
    if ok is None:
        raise UsageError("equivalence of infinite dictionaries is only certified when one is contained in the other")
    text = f"A^oo == B^oo: {_yes(ok)}"
    return Report({"a": a.label, "b": b.label, "equivalent": ok}, text, 0 if ok else 1)


def cmd_included(args) -> Report:
    a, b = _dict(args.a), _dict(args.b)
    if a.n != b.n:
        raise UsageError("dictionaries use different alphabets")
    _finite(b, "included (second dictionary)")
    ok = included(a, b)
    text = f"A^oo <= B^oo: {_yes(ok)}" + (
        "" if ok else "\n  some finite word kills every factorization over B while A can still go on"
    )
    return Report({"a": a.label, "b": b.label, "included": ok}, text, 0 if ok else 1)


def cmd_rank(args) -> Report:
    d = _dict(args.dictfile)
    alpha = _check_lasso(d, _lasso(args.lasso))
    r = rank_lasso(d, alpha)
    if isinstance(r, Member):
        text = f"{alpha} is in A^oo: the decomposition tree has an infinite branch"
    else:
        text = f"rank of the decomposition tree of {alpha}: {r.value}"
    payload = r.to_json()
    payload["lasso"] = str(alpha)
    return Report(payload, text, 0)


def cmd_elevel(args) -> Report:
    d = _dict(args.dictfile)
    alpha = _check_lasso(d, _lasso(args.lasso))
    if args.k < 0:
        raise FormatError("k must be nonnegative")
    ok = e_level(d, alpha, args.k)
    text = f"{alpha} in E_{args.k}: {_yes(ok)}"
    return Report({"lasso": str(alpha), "k": args.k, "in_level": ok}, text, 0 if ok else 1)


def cmd_decompose(args) -> Report:
    d = _dict(args.dictfile)
    alpha = _check_lasso(d, _lasso(args.lasso))
    if args.k < 0:
        raise FormatError("k must be nonnegative")
    try:
        chunks = greedy_decompose(d, alpha, args.k)
    except NotAMemberError as err:
        return Report({"lasso": str(alpha), "member": False, "chunks": None}, str(err), 1)
    text = " . ".join(_words(chunks)) + " . ..."
    return Report({"lasso": str(alpha), "member": True, "chunks": _words(chunks)}, text, 0)


def cmd_code_check(args) -> Report:
    d = _finite(_dict(args.dictfile), "code-check")
    try:
        ok = is_code(d)
    except ValueError as err:
        raise UsageError(str(err)) from None
    text = f"uniquely decipherable: {_yes(ok)}"
    return Report({"dictionary": d.label, "code": ok}, text, 0 if ok else 1)


def cmd_antichain(args) -> Report:
    d = _finite(_dict(args.dictfile), "antichain")
    ok = is_antichain(d)
    chains = chain_decomposition(d)
    text = f"antichain: {_yes(ok)}\nchains: " + " | ".join("{" + ", ".join(_words(c)) + "}" for c in chains)
    return Report({"antichain": ok, "chains": [_words(c) for c in chains]}, text, 0 if ok else 1)


def cmd_minimal(args) -> Report:
    d = _finite(_dict(args.dictfile), "minimal")
    B = minimal_generator(d)
    text = "{" + ", ".join(_words(B)) + "}"
    return Report({"dictionary": d.label, "minimal": _words(B)}, text, 0)


def cmd_tree_encode(args) -> Report:
    try:
        T = load_tree(args.treefile)
    except OSError as err:
        raise FormatError(str(err)) from None
    if tree_words_max_length(T) > args.max_length:
        raise UsageError(
            f"some code word is longer than {args.max_length} letters; raise --max-length to emit it"
        )
    words = sorted({phi_word(t, args.max_length) for t in T}, key=shortlex_key)
    text = dump_finite_dictionary(words, 2, "main").rstrip("\n")
    return Report({"words": _words(words)}, text, 0)


def cmd_alpha0(args) -> Report:
    if args.prefix < 0:
        raise FormatError("prefix length must be nonnegative")
    w = alpha0().prefix(args.prefix)
    text = "".join(map(str, w))
    return Report({"prefix": text, "length": args.prefix}, text, 0)


def cmd_examples(args) -> Report:
    entries = corpus()
    if not args.run:
        payload = {"entries": [{"name": e.name, "summary": e.summary, "checks": len(e.checks)} for e in entries]}
        text = "\n".join(f"{e.name:22s} {e.summary}" for e in entries)
        return Report(payload, text, 0)
    results = run_corpus(entries)
    failed = [r for r in results if not r.ok]
    payload = {
        "checks": len(results),
        "failed": [{"entry": r.entry, "check": r.description, "error": r.error} for r in failed],
        "passed": len(results) - len(failed),
    }
    lines = [f"{'ok  ' if r.ok else 'FAIL'} {r.entry}: {r.description} [{r.source}]" for r in results]
    lines.append(f"{len(results) - len(failed)}/{len(results)} checks passed")
    return Report(payload, "\n".join(lines), 0 if not failed else 1)


def cmd_explore(args) -> Report:
    """Scan small cases for counterexamples to two generator statements.

    1. For non-commuting pairs S, T of words of length <= L with S^oo <= T^oo,
       the total length of T is at most that of S.
    2. For every dictionary of at most W words of length <= L, whenever some
       pair of words of length <= L generates A^oo, a pair of prefixes of
       members does too (the restricted search behind ``gclass``).
    """
    L, Wmax = args.max_len, args.max_words
    if L < 1 or Wmax < 1:
        raise FormatError("--max-len and --max-words must be positive")
    pool = [w for w in Alphabet(2).words_upto(L) if w]
    pairs = [(s, t) for s, t in combinations(pool, 2) if not commutes(s, t)]
    gens = {p: Dictionary.finite(p) for p in pairs}
    length_bad: List[Tuple[List[str], List[str]]] = []
    for S in pairs:
        for T in pairs:
            if S != T and sum(map(len, T)) > sum(map(len, S)) and included(gens[S], gens[T]):
                length_bad.append((_words(S), _words(T)))
    search_bad: List[List[str]] = []
    scanned = 0
    for k in range(1, Wmax + 1):
        for A in combinations(pool, k):
            scanned += 1
            ok, _ = g2(A)
            if ok:
                continue
            D = Dictionary.finite(A)
            if any(equivalent(D, gens[p]) for p in pairs):
                search_bad.append(_words(A))
    payload = {
        "max_len": L,
        "max_words": Wmax,
        "pairs": len(pairs),
        "dictionaries": scanned,
        "length_counterexamples": length_bad,
        "prefix_search_counterexamples": search_bad,
    }
    text = (
        f"scanned {len(pairs)} non-commuting pairs and {scanned} dictionaries\n"
        f"pairs with S^oo <= T^oo but |T| > |S|: {len(length_bad)}\n"
        f"dictionaries with a two-word generator missed by the prefix search: {len(search_bad)}"
    )
    return Report(payload, text, 0 if not (length_bad or search_bad) else 1)


# -- argument parsing ------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS, help="machine-readable output")
    parser = argparse.ArgumentParser(
        prog="omegapower",
        description="Decide questions about infinite powers A^oo of dictionaries of finite words.",
        parents=[common],
    )
    sub = parser.add_subparsers(dest="verb", required=True)

    def verb(name: str, func, help: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help, parents=[common])
        p.set_defaults(func=func)
        return p

    p = verb("member", cmd_member, "is a lasso u(v) in A^oo?")
    p.add_argument("dictfile")
    p.add_argument("lasso")
    p = verb("classify", cmd_classify, "topological class, generator counts and rank summary")
    p.add_argument("dictfile")
    p = verb("gclass", cmd_gclass, "is A^oo generated by 0, 1, 2 (or up to P) words?")
    p.add_argument("dictfile")
    p.add_argument("--max-p", type=int, default=2)
    p = verb("equiv", cmd_equiv, "A^oo == B^oo?")
    p.add_argument("a")
    p.add_argument("b")
    p = verb("included", cmd_included, "A^oo <= B^oo? (B finite)")
    p.add_argument("a")
    p.add_argument("b")
    p = verb("rank", cmd_rank, "rank of the decomposition tree of a lasso")
    p.add_argument("dictfile")
    p.add_argument("lasso")
    p = verb("elevel", cmd_elevel, "is the lasso in the level set E_k?")
    p.add_argument("dictfile")
    p.add_argument("lasso")
    p.add_argument("k", type=int)
    p = verb("decompose", cmd_decompose, "first k chunks of the leftmost-shortest factorization")
    p.add_argument("dictfile")
    p.add_argument("lasso")
    p.add_argument("k", type=int)
    p = verb("code-check", cmd_code_check, "is the dictionary uniquely decipherable?")
    p.add_argument("dictfile")
    p = verb("antichain", cmd_antichain, "is the dictionary prefix-free? also prints a chain partition")
    p.add_argument("dictfile")
    p = verb("minimal", cmd_minimal, "an inclusion-minimal subset with the same infinite power")
    p.add_argument("dictfile")
    p = verb("tree-encode", cmd_tree_encode, "print the dictionary coding a finite tree")
    p.add_argument("treefile")
    p.add_argument("--max-length", type=int, default=100_000)
    p = verb("alpha0", cmd_alpha0, "print a prefix of 1 0 1 0^2 1 0^3 ...")
    p.add_argument("--prefix", type=int, required=True)
    p = verb("examples", cmd_examples, "list the built-in corpus, or check it with --run")
    p.add_argument("--run", action="store_true")
    p = verb("explore-conjecture", cmd_explore, "search small cases for counterexamples")
    p.add_argument("--max-len", type=int, required=True)
    p.add_argument("--max-words", type=int, required=True)
    return parser


def run(argv: Optional[Sequence[str]] = None) -> Tuple[int, str]:
    """Execute a command line; returns (exit code, rendered output)."""
    parser = build_parser()
    args = parser.parse_args(argv)
    as_json = getattr(args, "json", False)
    try:
        report = args.func(args)
    except (FormatError, UsageError) as err:
        msg = str(err)
        out = json.dumps({"error": msg}, sort_keys=True, indent=2) if as_json else f"error: {msg}"
        return 2, out
    return report.code, report.render(as_json)


def main(argv: Optional[Sequence[str]] = None) -> int:
    try:
        code, out = run(argv)
    except SystemExit as exc:  # argparse usage errors
        return int(exc.code or 0)
    stream = sys.stdout if code != 2 else sys.stderr
    print(out, file=stream)
    return code


if __name__ == "__main__":
    sys.exit(main())
