"""Command-line front end: convert, enumerate, verify, render and stats.

Exit codes: 0 on success, 1 when the input violates a domain invariant
(the message names it), 2 on usage errors.
"""

from __future__ import annotations

import argparse
import contextlib
import io
import json
import re
import sys
from dataclasses import asdict, dataclass
from typing import Callable, Sequence

from . import assemblee as asm
from . import bijections as bij
from . import laguerre as lag
from . import tableaux as tab
from .render import FORMATS, render
from .verify import CATALOG, KINDS, check_identity, enumerate_objects

__all__ = ["main", "run", "VIAS", "OBJECT_KINDS", "parse_object", "format_object"]


# ---------------------------------------------------------------- object text formats

@dataclass(frozen=True)
class Codec:
    parse: Callable[[str], object]
    format: Callable[[object], str]
    multiline: bool = False


def _checked_rat(text: str) -> tab.RAT:
    R = tab.parse_rat(text)
    bad = tab.validate_rat(R)
    if bad:
        raise tab.TableauError("; ".join(bad))
    return R


def _parse_packed(text: str) -> list:
    return [_checked_rat(b) for b in _records(text, multiline=True)]


def _format_packed(parts) -> str:
    return "\n\n".join(tab.format_rat(P) for _, P in parts)


def _parse_pair(text: str):
    left, sep, right = text.partition("|")
    if not sep:
        raise asm.AssembleeError("expected 'tau | sigma'")
    return asm.parse_signed(left), tuple(int(x) for x in right.split())


def _format_pair(pair) -> str:
    tau, sigma = pair
    return f"{tau} | {' '.join(map(str, sigma))}"


def _checked_mlh(text: str):
    H = lag.parse_mlh(text)
    bad = lag.validate_mlh(H)
    if bad:
        raise lag.LaguerreError("; ".join(bad))
    return H


def _checked_star(text: str):
    H = lag.parse_mlh_star(text)
    bad = lag.validate_mlh_star(H)
    if bad:
        raise lag.LaguerreError("; ".join(bad))
    return H


OBJECT_KINDS: dict = {
    "rat": Codec(_checked_rat, tab.format_rat, True),
    "at": Codec(_checked_rat, tab.format_rat, True),
    "packed": Codec(_parse_packed, _format_packed, True),
    "assemblee": Codec(asm.parse_assemblee, str),
    "signed": Codec(asm.parse_signed, str),
    "pair": Codec(_parse_pair, _format_pair),
    "word": Codec(asm.parse_word, asm.format_word),
    "cycles": Codec(asm.parse_cycles, asm.format_cycles),
    "mlh": Codec(_checked_mlh, lag.format_mlh),
    "mlh_star": Codec(_checked_star, lag.format_mlh_star),
}


def _zigzag_inverse(cycles):
    return bij.insertion_inverse(asm.eps_word_inv(asm.foata_inv(cycles)))


# via -> (source kind, target kind, forward map, inverse map)
VIAS: dict = {
    "insertion": ("rat", "assemblee", bij.insertion, bij.insertion_inverse),
    "zigzag": ("rat", "cycles", bij.arrow_zigzag, _zigzag_inverse),
    "fe": ("assemblee", "rat", bij.fusion_exchange, bij.fe_inverse),
    "zeta": ("rat", "signed", bij.zeta, bij.zeta_inverse),
    "flatten": ("rat", "at", tab.flatten, tab.unflatten),
    "split": ("rat", "packed", tab.split, tab.unsplit),
    "straighten": ("rat", "at", tab.straighten, tab.unstraighten),
    "rho": ("signed", "pair", lag.rho, lambda p: lag.rho_inverse(*p)),
    "sp2mlh": ("signed", "mlh_star", lag.sp_to_mlh, lag.mlh_to_sp),
    "star2plain": ("mlh_star", "mlh", lag.star_to_plain, lag.plain_to_star),
    "foata": ("word", "cycles", asm.foata, asm.foata_inv),
    "iota": ("assemblee", "word", asm.iota, asm.iota_inv),
    "epsword": ("assemblee", "word", asm.eps_word, asm.eps_word_inv),
}

_STEP_TOKEN = re.compile(r"[UHhD](:\d+(,\d+)?)?(!(ad|a|d)?)?")


def detect_kind(text: str) -> str:
    t = text.strip()
    if re.search(r"(?m)^\s*shape\s*:", t):
        return "rat"
    if t.startswith("["):
        return "assemblee"
    if t.startswith("("):
        return "cycles"
    if "|" in t:
        return "pair"
    toks = t.split()
    if toks and all(_STEP_TOKEN.fullmatch(x) for x in toks):
        plain = any(x.startswith("U:") for x in toks) or not any(
            re.search(r"!(a|d)|,|^U(!|$)", x) for x in toks
        )
        return "mlh" if plain else "mlh_star"
    if re.search(r"[eε]\d", t):
        return "word"
    if "-" in t or "−" in t:
        return "signed"
    return "word"


def parse_object(text: str, kind: str | None = None):
    kind = kind or detect_kind(text)
    return kind, OBJECT_KINDS[kind].parse(text)


def format_object(kind: str, obj) -> str:
    return OBJECT_KINDS[kind].format(obj)


def _records(text: str, multiline: bool) -> list[str]:
    if multiline:
        return [b for b in re.split(r"\n\s*\n", text.strip()) if b.strip()]
    return [line for line in text.splitlines() if line.strip() and not line.lstrip().startswith("#")]


# ---------------------------------------------------------------- commands

def _read(path: str | None, stdin) -> str:
    if path in (None, "-"):
        return stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _cmd_convert(args, stdin, out) -> int:
    src, dst, fwd, inv = VIAS[args.via]
    forward = True
    if args.from_kind or args.to_kind:
        pair_fwd = (args.from_kind or src, args.to_kind or dst)
        pair_inv = (args.from_kind or dst, args.to_kind or src)
        if pair_fwd == (src, dst):
            forward = True
        elif pair_inv == (dst, src):
            forward = False
        else:
            raise _Usage(f"--via {args.via} maps {src} -> {dst} (or back); got {pair_fwd[0]} -> {pair_fwd[1]}")
    in_kind, out_kind, fn = (src, dst, fwd) if forward else (dst, src, inv)
    text = _read(args.file, stdin)
    codec_in, codec_out = OBJECT_KINDS[in_kind], OBJECT_KINDS[out_kind]
    items = _records(text, codec_in.multiline) if args.each else [text]
    if in_kind == "packed":
        items = [text]
    results = [codec_out.format(fn(codec_in.parse(item))) for item in items]
    sep = "\n\n" if codec_out.multiline else "\n"
    out.write(sep.join(results) + "\n")
    return 0


def _stats_lines(kind: str, obj) -> list[str]:
    if kind in ("rat", "at"):
        st = tab.compute_stats(obj)
        d = asdict(st)
        return [f"{k}: {' '.join(map(str, v)) if isinstance(v, tuple) else v}" for k, v in d.items()]
    if kind == "assemblee":
        return [f"blocks: {len(obj.blocks)}"] + _stats_lines("signed", asm.to_signed(obj))
    if kind == "signed":
        s = asm.signed_stats(obj)
        p = asm.crossings(obj)
        return [
            f"sh: {''.join(map(str, s.sh))}",
            f"sinv: {s.sinv}",
            f"wex: {s.wex}",
            f"neg: {' '.join(map(str, s.neg))}",
            f"lrmax: {s.lrmax}",
            f"rlmin: {s.rlmin}",
            f"cro: {s.cro}",
            f"cro_upper: {' '.join(str(p.upper_by_b[b]) for b in obj.domain)}",
            f"cro_lower: {' '.join(str(p.lower_by_b[b]) for b in obj.domain)}",
        ]
    if kind == "mlh":
        return [f"steps: {len(obj)}", f"marks: {lag.mark_count(obj)}", f"weight: q^{lag.weight_exponent(obj)}"]
    if kind == "mlh_star":
        return [f"steps: {len(obj)}", f"marks: {lag.mark_count(obj)}", f"weight: q^{lag.weight_exponent_star(obj)}"]
    if kind == "word":
        w = asm.word_stats(obj)
        return [
            f"inv: {w.inv}",
            f"rlmin: {asm.format_word(w.rlmin)}",
            f"rlmax: {asm.format_word(w.rlmax)}",
            f"ides: {' '.join(map(str, sorted(w.ides)))}",
        ]
    if kind == "cycles":
        return [f"cycles: {len(obj)}", f"word: {asm.format_word(asm.foata_inv(obj))}"]
    raise _Usage(f"no statistics for kind {kind!r}")


def _cmd_stats(args, stdin, out) -> int:
    kind, obj = parse_object(_read(args.file, stdin), args.kind)
    out.write("\n".join(_stats_lines(kind, obj)) + "\n")
    return 0


def _cmd_render(args, stdin, out) -> int:
    kind, obj = parse_object(_read(args.file, stdin), args.kind)
    out.write(render(obj, args.format))
    return 0


ENUM_FORMAT = {
    "rat": "rat", "rat_plus": "rat", "at": "at", "assemblee": "assemblee",
    "signed_sp": "signed", "signed_as": "signed", "mlh": "mlh", "mlh_star": "mlh_star",
}


def _cmd_enumerate(args, stdin, out) -> int:
    kind = ENUM_FORMAT[args.kind]
    codec = OBJECT_KINDS[kind]
    count = 0
    first = True
    for obj in enumerate_objects(args.kind, args.n, args.r, max_n=args.max_n):
        count += 1
        if args.count:
            continue
        block = codec.format(obj)
        if args.stats:
            block += "\n" + "; ".join(_stats_lines(kind, obj))
        if codec.multiline or args.stats:
            out.write(("" if first else "\n") + block + "\n")
        else:
            out.write(block + "\n")
        first = False
    if args.count:
        out.write(f"{count}\n")
    return 0


def _cmd_verify(args, stdin, out) -> int:
    ids = args.identity or list(CATALOG)
    reports = [check_identity(i, args.max_n) for i in ids]
    if args.json:
        out.write(json.dumps([r.to_json() for r in reports], indent=2) + "\n")
    else:
        for r in reports:
            out.write("\n".join(r.lines()) + "\n")
    return 0 if all(r.passed for r in reports) else 1


class _Usage(Exception):
    pass


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="ratab", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("convert", help="apply a bijection to one object")
    c.add_argument("--via", required=True, choices=sorted(VIAS))
    c.add_argument("--from", dest="from_kind", choices=sorted(OBJECT_KINDS))
    c.add_argument("--to", dest="to_kind", choices=sorted(OBJECT_KINDS))
    c.add_argument("--each", action="store_true", help="treat the input as a batch of objects")
    c.add_argument("file", nargs="?", help="input file (default: stdin)")
    c.set_defaults(func=_cmd_convert)

    e = sub.add_parser("enumerate", help="list every object of a given size")
    e.add_argument("kind", choices=KINDS)
    e.add_argument("n", type=int)
    e.add_argument("r", type=int, nargs="?", default=0)
    e.add_argument("--stats", action="store_true")
    e.add_argument("--count", action="store_true", help="print only the number of objects")
    e.add_argument("--max-n", type=int, default=7)
    e.set_defaults(func=_cmd_enumerate)

    v = sub.add_parser("verify", help="run identity checks")
    v.add_argument("--identity", action="append", type=str.upper, choices=sorted(CATALOG))
    v.add_argument("--max-n", type=int)
    v.add_argument("--json", action="store_true")
    v.set_defaults(func=_cmd_verify)

    r = sub.add_parser("render", help="draw an object")
    r.add_argument("--format", required=True, choices=FORMATS)
    r.add_argument("--kind", choices=sorted(OBJECT_KINDS))
    r.add_argument("file", nargs="?")
    r.set_defaults(func=_cmd_render)

    s = sub.add_parser("stats", help="print the statistics of an object")
    s.add_argument("--kind", choices=sorted(OBJECT_KINDS))
    s.add_argument("file", nargs="?")
    s.set_defaults(func=_cmd_stats)
    return p


def run(argv: Sequence[str], stdin=None) -> tuple[int, str, str]:
    """Run one command; returns (exit code, stdout text, stderr text)."""
    out, err = io.StringIO(), io.StringIO()
    stdin = stdin if stdin is not None else sys.stdin
    if isinstance(stdin, str):
        stdin = io.StringIO(stdin)
    parser = build_parser()
    with contextlib.redirect_stderr(err):
        try:
            args = parser.parse_args(list(argv))
        except SystemExit as exc:
            return (exc.code if isinstance(exc.code, int) else 2), out.getvalue(), err.getvalue()
    try:
        code = args.func(args, stdin, out)
    except _Usage as exc:
        err.write(f"usage error: {exc}\n")
        return 2, out.getvalue(), err.getvalue()
    except OSError as exc:
        err.write(f"error: {exc}\n")
        return 2, out.getvalue(), err.getvalue()
    except (ValueError, KeyError, IndexError) as exc:
        msg = exc.args[0] if isinstance(exc, KeyError) and exc.args else exc
        err.write(f"error: {type(exc).__name__}: {msg}\n")
        return 1, out.getvalue(), err.getvalue()
    return code, out.getvalue(), err.getvalue()


def main(argv: Sequence[str] | None = None) -> int:
    code, out, err = run(sys.argv[1:] if argv is None else argv)
    sys.stdout.write(out)
    sys.stderr.write(err)
    return code


if __name__ == "__main__":
    raise SystemExit(main())
