"""Parsing and printing of ideal description files.

Grammar (one directive per line, ``#`` starts a comment, blank lines are
ignored; a ``gens`` list ending in a comma continues on the next line):

    file       = {line}
    line       = ring-decl | char-decl | weights-decl | gens-decl
    ring-decl  = "ring" name {"," name}
    char-decl  = "char" integer              ; 0 or a prime
    weights    = "weights" integer {"," integer}
    gens-decl  = "gens" monomial {"," monomial}
    monomial   = "1" | factor {"*" factor}
    factor     = name ["^" integer]

The ring declaration must precede gens; char defaults to 65537.
"""

from __future__ import annotations

import re

from .errors import IdealParseError
from .monomials import MonomialIdeal, RingContext, monomial_str
from .scalars import FieldSpec, is_prime

DEFAULT_CHARACTERISTIC = 65537

_NAME = re.compile(r"[A-Za-z_][A-Za-z_0-9]*$")


def parse_monomial(text: str, names, line=None) -> tuple:
    """One monomial in the grammar above, as an exponent vector."""
    text = text.strip()
    if not text:
        raise IdealParseError("empty monomial", line)
    if text == "1":
        return (0,) * len(names)
    exp = [0] * len(names)
    index = {name: i for i, name in enumerate(names)}
    for factor in text.split("*"):
        factor = factor.strip()
        if not factor:
            raise IdealParseError(f"empty factor in monomial '{text}'", line)
        if "^" in factor:
            base, _, power = factor.partition("^")
            base = base.strip()
            power = power.strip()
            if not power.isdigit():
                raise IdealParseError(f"bad exponent '{power}'", line)
            e = int(power)
        else:
            base, e = factor, 1
        if base not in index:
            raise IdealParseError(f"unknown variable '{base}'", line)
        exp[index[base]] += e
    return tuple(exp)


def parse_ideal_file(text: str):
    """-> (RingContext, MonomialIdeal).  Errors carry line numbers."""
    names = None
    char = None
    weights = None
    gen_tokens = []
    ring_line = None

    lines = text.splitlines()
    i = 0
    while i < len(lines):
        lineno = i + 1
        raw = lines[i].split("#", 1)[0].strip()
        i += 1
        if not raw:
            continue
        keyword, _, rest = raw.partition(" ")
        keyword = keyword.lower()
        if keyword == "ring":
            if names is not None:
                raise IdealParseError("duplicate ring declaration", lineno)
            names = tuple(tok.strip() for tok in rest.split(","))
            if not rest.strip() or any(not _NAME.match(tok) for tok in names):
                raise IdealParseError("ring needs a comma-separated list of names", lineno)
            if len(set(names)) != len(names):
                raise IdealParseError("variable names must be distinct", lineno)
            ring_line = lineno
        elif keyword == "char":
            if char is not None:
                raise IdealParseError("duplicate char declaration", lineno)
            tok = rest.strip()
            if not tok.isdigit():
                raise IdealParseError("char needs an integer", lineno)
            char = int(tok)
            if char != 0 and not is_prime(char):
                raise IdealParseError("characteristic must be 0 or prime", lineno)
        elif keyword == "weights":
            if weights is not None:
                raise IdealParseError("duplicate weights declaration", lineno)
            toks = [t.strip() for t in rest.split(",")]
            if any(not t.isdigit() or int(t) < 1 for t in toks):
                raise IdealParseError("weights must be positive integers", lineno)
            weights = tuple(int(t) for t in toks)
        elif keyword == "gens":
            if names is None:
                raise IdealParseError("gens before ring declaration", lineno)
            chunk = rest.strip()
            while chunk.endswith(","):
                if i >= len(lines):
                    raise IdealParseError("generator list ends with a comma", lineno)
                nxt = lines[i].split("#", 1)[0].strip()
                i += 1
                chunk += " " + nxt
            gen_tokens.extend(
                (tok.strip(), lineno) for tok in chunk.split(",") if tok.strip())
        else:
            raise IdealParseError(f"unknown directive '{keyword}'", lineno)

    if names is None:
        raise IdealParseError("missing ring declaration", ring_line or 1)
    if not gen_tokens:
        raise IdealParseError("empty gens", len(lines) or 1)
    if weights is not None and len(weights) != len(names):
        raise IdealParseError("weights count does not match ring", 1)
    if char is None:
        char = DEFAULT_CHARACTERISTIC
    ring = RingContext(names, FieldSpec(char), weights)
    gens = [parse_monomial(tok, names, line) for tok, line in gen_tokens]
    return ring, MonomialIdeal(ring, gens)


def format_ideal(ideal: MonomialIdeal) -> str:
    names = ideal.ring.variable_names
    if ideal.is_zero():
        return "0"
    return "\n".join(monomial_str(g, names) for g in ideal.gens)


def format_ideal_file(ideal: MonomialIdeal) -> str:
    """A parseable file reproducing the ideal (round-trip support)."""
    ring = ideal.ring
    out = ["ring " + ", ".join(ring.variable_names),
           f"char {ring.field.characteristic}"]
    if ring.weights:
        out.append("weights " + ", ".join(str(w) for w in ring.weights))
    names = ring.variable_names
    out.append("gens " + ", ".join(monomial_str(g, names) for g in ideal.gens))
    return "\n".join(out) + "\n"
