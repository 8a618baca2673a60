"""Command-line client for the semigroup/classify/verify operations.

The CLI holds no math of its own: each subcommand builds a request
model, hands it to the service layer (in process by default, or to a
running HTTP service via --server), and renders the JSON payload as a
table, raw JSON, or CSV.  Exit codes: 0 success, 1 a requested check
failed, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys

from .schemas import (ClassifyRequest, SemigroupRequest, VerifyRequest)

PLACE_LABEL = {"p0": "P0", "pinf": "Pinf", "palpha": "Palpha"}


# ---------------------------------------------------------------------------
# dispatch (in-process or remote)
# ---------------------------------------------------------------------------

def _call(server: str | None, endpoint: str, request) -> dict:
    if server:
        import httpx

        resp = httpx.post(f"{server.rstrip('/')}/{endpoint}",
                          json=request.model_dump(), timeout=600.0)
        if resp.status_code == 422:
            raise ValueError(resp.json().get("detail", resp.text))
        resp.raise_for_status()
        return resp.json()
    from . import service

    handler = {
        "semigroup": service.semigroup_report,
        "classify": service.classification_report,
        "verify": service.verification_report,
    }[endpoint]
    return handler(request).model_dump(mode="json")


# ---------------------------------------------------------------------------
# renderers (pure functions of the JSON payload)
# ---------------------------------------------------------------------------

def _fmt_gaps(gaps) -> str:
    return " ".join(str(g) for g in gaps)


def render_semigroup_table(p: dict) -> str:
    lines = [f"q = {p['q']}  m = {p['m']}  i = {p['i']}  genus = {p['genus']}"]
    label = PLACE_LABEL[p["place"]]
    lines.append(f"G({label}) = {_fmt_gaps(p['gaps'])}")
    if p.get("generators"):
        lines.append("generators: " + ", ".join(str(g) for g in p["generators"]))
    if p.get("apery"):
        lines.append("apery set (mod m): "
                     + ", ".join(str(a) for a in p["apery"]))
    if p.get("oracle"):
        o = p["oracle"]
        verdict = "agree" if o["agrees"] else "DISAGREE"
        lines.append(f"oracle[{o['method']}]: {verdict}  ({o['details']})")
    return "\n".join(lines) + "\n"


def render_semigroup_csv(p: dict) -> str:
    return "i,place,gaps\n" + \
        f"{p['i']},{p['place']},{_fmt_gaps(p['gaps'])}\n"


def _class_columns(p: dict) -> list[dict]:
    """Per-class display data; paper labeling swaps P0 and Pinf gaps
    because the index pairing x -> 1/x exchanges the two places."""
    cols = []
    for c in p["classes"]:
        use_paper = p.get("paper_labels")
        label = c["paper_label"] if use_paper else c["canonical"]
        swap = use_paper and c["paper_label"] != c["canonical"]
        g = c["gaps"]
        cols.append({
            "label": label,
            "members": c["members"],
            "pinf": g["p0"] if swap else g["pinf"],
            "p0": g["pinf"] if swap else g["p0"],
            "palpha": g["palpha"],
            "aut": c.get("aut"),
            "maximal": c.get("maximal"),
            "distinct": c["profile_distinct"],
        })
    return cols


def render_classify_table(p: dict) -> str:
    head = f"m = {p['m']}"
    if p.get("q"):
        head += f"  q = {p['q']}"
    head += f"  phi2 = {p['phi2']}  classes = {p['class_count']}"
    lines = [head, ""]
    cols = _class_columns(p)
    rows = [("i", lambda c: str(c["label"])),
            ("members", lambda c: ",".join(str(x) for x in c["members"])),
            ("G(Pinf)", lambda c: _fmt_gaps(c["pinf"])),
            ("G(P0)", lambda c: _fmt_gaps(c["p0"]))]
    if any(c["palpha"] for c in cols):
        rows.append(("G(Palpha)",
                     lambda c: _fmt_gaps(c["palpha"]) if c["palpha"] else "-"))
    if any(c["aut"] for c in cols):
        rows.append(("aut", lambda c: "-" if not c["aut"] else
                     f"{c['aut']['label']} |{c['aut']['order']}|"
                     + ("?" if c["aut"]["conjectural"] else "")))
    if any(c["maximal"] for c in cols):
        rows.append(("maximal", lambda c: "-" if not c["maximal"] else
                     ("yes" if c["maximal"]["attained"] else "NO")))
    rows.append(("distinct", lambda c: "yes" if c["distinct"] else "COLLIDES"))

    widths = [max(len(name) for name, _ in rows)]
    for c in cols:
        widths.append(max(len(fn(c)) for _, fn in rows))
    for name, fn in rows:
        cells = [name.ljust(widths[0])]
        cells += [fn(c).ljust(widths[k + 1]) for k, c in enumerate(cols)]
        lines.append(" | ".join(cells).rstrip())
    return "\n".join(lines) + "\n"


def render_classify_csv(p: dict) -> str:
    out = ["i,place,gaps"]
    for c in _class_columns(p):
        out.append(f"{c['label']},pinf,{_fmt_gaps(c['pinf'])}")
        out.append(f"{c['label']},p0,{_fmt_gaps(c['p0'])}")
        if c["palpha"]:
            out.append(f"{c['label']},palpha,{_fmt_gaps(c['palpha'])}")
    return "\n".join(out) + "\n"


def render_verify_table(p: dict) -> str:
    lines = [f"suite = {p['suite']}  qmax = {p['qmax']}",
             f"checks: {p['total']}  passed: {p['total'] - p['failed']}"
             f"  failed: {p['failed']}"]
    if p.get("first_failure"):
        f = p["first_failure"]
        lines.append(f"first failure: {f['name']}  ({f['details']})")
    lines.append("PASS" if p["passed"] else "FAIL")
    return "\n".join(lines) + "\n"


def render_verify_csv(p: dict) -> str:
    out = ["name,passed,details"]
    for c in p["checks"]:
        detail = c["details"].replace(",", ";")
        out.append(f"{c['name']},{int(c['passed'])},{detail}")
    return "\n".join(out) + "\n"


def _emit(payload: dict, fmt: str, table_fn, csv_fn, out: str | None) -> None:
    if fmt == "json":
        text = json.dumps(payload, indent=2) + "\n"
    elif fmt == "csv":
        text = csv_fn(payload)
    else:
        text = table_fn(payload)
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------

def _cmd_semigroup(args) -> int:
    req = SemigroupRequest(q=args.q, i=args.i, place=args.place,
                           oracle=args.oracle)
    payload = _call(args.server, "semigroup", req)
    _emit(payload, args.format, render_semigroup_table,
          render_semigroup_csv, args.out)
    if args.oracle and payload.get("oracle") and \
            not payload["oracle"]["agrees"]:
        return 1
    return 0


def _cmd_classify(args) -> int:
    req = ClassifyRequest(m=args.m, q=args.q,
                          with_field_checks=args.with_field_checks,
                          paper_labels=args.paper_labels, qmax=args.qmax)
    payload = _call(args.server, "classify", req)
    _emit(payload, args.format, render_classify_table,
          render_classify_csv, args.out)
    bad_max = any(
        c.get("maximal") and not c["maximal"]["attained"]
        for c in payload["classes"]
    )
    return 1 if bad_max else 0


def _cmd_verify(args) -> int:
    req = VerifyRequest(suite=args.suite, qmax=args.qmax,
                        samples=args.samples)
    payload = _call(args.server, "verify", req)
    _emit(payload, args.format, render_verify_table,
          render_verify_csv, args.out)
    return 0 if payload["passed"] else 1


def _cmd_serve(args) -> int:
    import uvicorn

    from .api import app

    uvicorn.run(app, host=args.host, port=args.port)
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="maxcurves",
        description="Gap sequences, isomorphism classes and verification "
                    "suites for the curves y^m = x^i(x^2+1) over GF(q^2).",
    )
    ap.add_argument("--server", metavar="URL", default=None,
                    help="send the request to a running service instead of "
                         "computing in process")
    sub = ap.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("semigroup", help="gap sequence at one place")
    sp.add_argument("--q", type=int, required=True)
    sp.add_argument("--i", type=int, required=True)
    sp.add_argument("--place", choices=["p0", "pinf", "palpha"], default="p0")
    sp.add_argument("--oracle", action="store_true",
                    help="cross-check with the independent oracle")
    sp.add_argument("--format", choices=["table", "json", "csv"],
                    default="table")
    sp.add_argument("--out", default=None, help="write output to a file")
    sp.set_defaults(fn=_cmd_semigroup)

    cp = sub.add_parser("classify", help="isomorphism classes for one m")
    g = cp.add_mutually_exclusive_group(required=True)
    g.add_argument("--m", type=int, default=None)
    g.add_argument("--q", type=int, default=None)
    cp.add_argument("--with-field-checks", action="store_true",
                    dest="with_field_checks",
                    help="also run the P+-a series oracle and point counts")
    cp.add_argument("--paper-labels", action="store_true",
                    dest="paper_labels",
                    help="label classes by the larger member index")
    cp.add_argument("--qmax", type=int, default=49,
                    help="cap for the point-counting check")
    cp.add_argument("--format", choices=["table", "json", "csv"],
                    default="table")
    cp.add_argument("--out", default=None)
    cp.set_defaults(fn=_cmd_classify)

    vp = sub.add_parser("verify", help="run a verification suite")
    vp.add_argument("--suite", required=True,
                    choices=["tables25", "maximality", "oracles", "maps",
                             "all"])
    vp.add_argument("--qmax", type=int, default=49)
    vp.add_argument("--samples", type=int, default=100)
    vp.add_argument("--format", choices=["table", "json", "csv"],
                    default="table")
    vp.add_argument("--out", default=None)
    vp.set_defaults(fn=_cmd_verify)

    srv = sub.add_parser("serve", help="run the HTTP service")
    srv.add_argument("--host", default="127.0.0.1")
    srv.add_argument("--port", type=int, default=8000)
    srv.set_defaults(fn=_cmd_serve)

    return ap


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        return args.fn(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
