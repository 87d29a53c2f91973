"""Report builders shared by the CLI and the HTTP service.

Each run_* function takes the raw text inputs of one command, parses them,
runs the core pipeline, and returns a JSON-ready dict with a fixed key
order.  Keys never depend on dict iteration quirks, and every value is an
int, str, bool, list or dict, so json.dumps output is reproducible byte
for byte.
"""

from __future__ import annotations

import json

from . import braid as braidmod
from . import classify as classifymod
from . import openbook as bookmod
from .braid import closure_data, parse_braid_word
from .classify import (ConnectedSum, Lens, ManifoldClass, ObgResult, S1xS2, S3,
                       SeifertPrime, Unknown, classify_dbc_3braid,
                       classify_pants, obg_eval)
from .errors import DomainError, ParseError
from .exactalg import AbelianGroup, IntMatrix, cokernel, smith_normal_form
from .mcg import parse_pants
from .openbook import dbc_open_book, induced_heegaard_genus, parse_pages

# Witness strings: short machine-stable reasons attached to reports.
W_SEIFERT = "pants-book-gives-seifert-fibration"
W_PRIME = "nonzero-twist-exponents-force-prime"
W_LENS_REFINE = "at-most-two-exceptional-fibers-give-lens-space"
W_SPLIT = "zero-twist-exponent-splits-off-lens-summands"
W_DBC = "double-branched-cover-of-braid-closure"
W_POWER_FORM = "closure-splits-as-two-torus-links"
W_TORUS_LINK = "two-braid-closure-is-torus-link"
W_UNKNOT = "unknot-closure-gives-s3"
W_BURAU_H1 = "homology-from-burau-action-at-minus-one"
W_OBG0 = "genus-zero-book-only-for-s3"
W_OBG1 = "genus-one-books-give-lens-p-1"
W_OBG_SUM = "heegaard-genus-additive-over-connected-sum"
W_OBG_SEIFERT = "three-exceptional-fibers-exclude-lens"
W_PAGE_BOUND = "page-euler-characteristic-bounds-genus"
W_PLUMB = "plumbing-adds-page-euler-characteristics"


def class_to_dict(classified: ManifoldClass) -> dict:
    if isinstance(classified, S3):
        return {"type": "s3"}
    if isinstance(classified, S1xS2):
        return {"type": "s1xs2"}
    if isinstance(classified, Lens):
        out = {"type": "lens", "p": classified.p}
        if classified.q is not None:
            out["q"] = classified.q
        return out
    if isinstance(classified, SeifertPrime):
        return {"type": "seifert",
                "fibers": [[alpha, beta]
                           for alpha, beta in classified.invariants.fibers]}
    if isinstance(classified, ConnectedSum):
        return {"type": "connected_sum",
                "summands": [class_to_dict(s) for s in classified.summands]}
    assert isinstance(classified, Unknown)
    return {"type": "unknown"}


def h1_to_dict(group: AbelianGroup) -> dict:
    return {"rank": group.free_rank, "torsion": list(group.torsion)}


def obg_to_dict(result: ObgResult) -> dict:
    out = {"lower": result.lower, "upper": result.upper}
    if result.exact is not None:
        out["exact"] = result.exact
    return out


def _class_h1(classified: ManifoldClass) -> AbelianGroup:
    return classified.h1


def _dedupe(witnesses: list[str]) -> list[str]:
    seen: set[str] = set()
    out = []
    for w in witnesses:
        if w not in seen:
            seen.add(w)
            out.append(w)
    return out


def _obg_witnesses(classified: ManifoldClass, result: ObgResult) -> list[str]:
    if isinstance(classified, S3):
        return [W_OBG0]
    if isinstance(classified, S1xS2):
        return [W_OBG1]
    if isinstance(classified, Lens):
        if result.exact == 1:
            return [W_OBG1]
        if result.exact == 2:
            return [W_OBG1, W_PAGE_BOUND]
        return [W_PAGE_BOUND]
    if isinstance(classified, ConnectedSum):
        return [W_OBG_SUM, W_PLUMB]
    if isinstance(classified, SeifertPrime):
        if result.exact == 2:
            return [W_OBG_SEIFERT, W_PAGE_BOUND]
        return [W_PAGE_BOUND]
    return [W_PAGE_BOUND]


def run_pants(exponents_text: str) -> dict:
    """Classify the pants open book named by "r1,r2,r3"."""
    monodromy = parse_pants(exponents_text)
    classified = classify_pants(monodromy)
    result = obg_eval(classified)
    witnesses = [W_SEIFERT]
    if 0 in monodromy.exponents():
        witnesses.append(W_SPLIT)
    else:
        witnesses.append(W_PRIME)
        if not isinstance(classified, SeifertPrime):
            witnesses.append(W_LENS_REFINE)
    witnesses = _dedupe(witnesses + _obg_witnesses(classified, result))
    return {
        "input": {"command": "pants", "exponents": list(monodromy.exponents())},
        "class": class_to_dict(classified),
        "h1": h1_to_dict(_class_h1(classified)),
        "obg": obg_to_dict(result),
        "witnesses": witnesses,
    }


def run_dbc(word_text: str, strands: int | None = None,
            classify: bool | None = None) -> dict:
    """Branched double cover of a braid closure: page data always, plus the
    classification pipeline for 3-braids.

    classify=None decides from the strand count (on for <= 3 strands),
    True forces it (a DomainError for > 3 strands), False skips it.
    """
    word = parse_braid_word(word_text, strands)
    book = dbc_open_book(word)
    report = {
        "input": {"command": "dbc", "word": list(word.letters),
                  "strands": word.strands},
        "page": {"genus": book.page.genus, "boundary": book.page.boundary,
                 "chi": book.page.chi},
        "obg_bound": induced_heegaard_genus(book),
    }
    want_classify = classify if classify is not None else word.strands <= 3
    witnesses = [W_DBC, W_PAGE_BOUND]
    if want_classify:
        if word.strands > 3:
            raise DomainError("classification is implemented for 3-braids; "
                              "rerun without --classify for page data only")
        if word.strands == 1:
            # Closure is the unknot, branched cover the sphere.
            classified: ManifoldClass = S3()
            witnesses.append(W_UNKNOT)
        elif word.strands == 2:
            # Every 2-braid word is sigma_1^e; the closure is the (2, e)
            # torus link and the cover the lens space L(e, 1).
            classified = classifymod.normalized_lens_sum([word.exponent_sum()])
            witnesses.append(W_TORUS_LINK)
        else:
            classified = classify_dbc_3braid(word)
            if isinstance(classified, Unknown):
                witnesses.append(W_BURAU_H1)
            else:
                witnesses.append(W_POWER_FORM)
        result = obg_eval(classified)
        witnesses.extend(_obg_witnesses(classified, result))
        report["class"] = class_to_dict(classified)
        report["h1"] = h1_to_dict(_class_h1(classified))
        report["obg"] = obg_to_dict(result)
    report["witnesses"] = _dedupe(witnesses)
    return report


def run_plumb(pages_text: str) -> dict:
    """Plumb the listed pages and report the genus bookkeeping."""
    pages = parse_pages(pages_text)
    book = bookmod.plumb_pages(pages)
    genus = induced_heegaard_genus(book)
    return {
        "input": {"command": "plumb",
                  "pages": [[p.genus, p.boundary] for p in pages]},
        "page": {"genus": book.page.genus, "boundary": book.page.boundary,
                 "chi": book.page.chi},
        "heegaard_genus": genus,
        "obg": {"lower": 0, "upper": genus},
        "witnesses": [W_PLUMB, W_PAGE_BOUND],
    }


def run_snf(matrix_text: str) -> dict:
    """Smith normal form and cokernel of an integer matrix."""
    matrix = parse_matrix(matrix_text)
    sf = smith_normal_form(matrix)
    group = cokernel(matrix)
    return {
        "input": {"command": "snf", "matrix": matrix.to_rows()},
        "smith": {"d": list(sf.d)},
        "cokernel": h1_to_dict(group),
    }


def run_braid_info(word_text: str, strands: int | None = None) -> dict:
    """Closure data of a braid word, with Burau data for 3-braids."""
    word = parse_braid_word(word_text, strands)
    data = closure_data(word)
    report = {
        "input": {"command": "braid-info", "word": list(word.letters),
                  "strands": word.strands},
        "closure": {"components": data.components,
                    "exponent_sum": data.exponent_sum,
                    "strands": data.strands},
    }
    if word.strands == 3:
        burau = braidmod.burau_neg1(word)
        report["burau_neg1"] = burau.to_rows()
        report["determinant"] = braidmod.determinant_of_closure_3braid(word)
    return report


def parse_matrix(text: str) -> IntMatrix:
    """Parse a matrix given as JSON rows ("[[1,2],[3,4]]") or as semicolon-
    separated rows of whitespace/comma-separated integers ("1 2; 3 4")."""
    stripped = text.strip()
    if stripped.startswith("["):
        try:
            data = json.loads(stripped)
        except json.JSONDecodeError as exc:
            raise ParseError(f"bad matrix JSON: {exc}") from None
        if not isinstance(data, list) or not all(isinstance(r, list) for r in data):
            raise ParseError("matrix JSON must be a list of rows")
        rows = []
        for r in data:
            row = []
            for e in r:
                if isinstance(e, bool) or not isinstance(e, int):
                    raise ParseError(f"matrix entry {e!r} is not an integer")
                row.append(e)
            rows.append(row)
    else:
        rows = []
        for chunk in stripped.split(";"):
            row = []
            for tok in chunk.replace(",", " ").split():
                try:
                    row.append(int(tok))
                except ValueError:
                    raise ParseError(f"bad matrix entry {tok!r}") from None
            rows.append(row)
        if rows == [[]]:
            rows = []
    if any(len(r) != len(rows[0]) for r in rows[1:]):
        raise ParseError("matrix rows have unequal lengths")
    try:
        return IntMatrix.from_rows(rows)
    except ValueError as exc:
        raise ParseError(str(exc)) from None


def to_json(report: dict, pretty: bool = False) -> str:
    """Serialise a report deterministically; compact single line by default."""
    if pretty:
        return json.dumps(report, indent=2)
    return json.dumps(report, separators=(",", ":"))
