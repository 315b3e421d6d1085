import json
import logging
import sys

from nfoldlib import constants
from nfoldlib.errors import AlgebraParseError, GuardExceededError, VerificationError
from nfoldlib.homalg import global_dim
from nfoldlib.quiverlang import load_algebra
from nfoldlib.stringindec import build_catalog
from nfoldlib.subcat import Subcat, check_catalog_size, cok_or_ker_n, enumerate_nfold, ke_ce_closure, \
    torsion_closure
from nfoldlib.taufold import TauRigidModule, check_star, enumerate_tau_rigid, pairing_table, \
    support_tau_tilting, torsion_lattice, two_fold_torsion_pair, verify_bijection

logger = logging.getLogger(__name__)


class Outcome:
    """What a command produced: a JSON payload, its text rendering, an optional DOT rendering and a status."""

    def __init__(self, payload, text, dot=None, ok=True):
        self.payload = payload
        self.text = text
        self.dot = dot
        self.ok = ok


def run(config, out=None, err=None):
    """
    Execute one validated configuration.

    Parameters
    ----------
    config : RunConfig
    out, err : file-like, optional
        Default to stdout and stderr.

    Returns
    -------
    int
        0 on success, 2 on a parse error or missing file, 3 when a guard is exceeded, 4 when a verification
        fails.
    """
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    try:
        config.validate()
        algebra = load_algebra(config.algebra)
        cat = build_catalog(algebra, seed=config.seed)
        check_catalog_size(cat)
        outcome = _COMMANDS[config.command](cat, config)
    except (AlgebraParseError, FileNotFoundError) as e:
        print(f"ERROR: {e}", file=err)
        return 2
    except GuardExceededError as e:
        print(f"ERROR: {e}", file=err)
        return 3
    except VerificationError as e:
        print(f"ERROR: {e}", file=err)
        return 4
    except ValueError as e:
        print(f"ERROR: {e}", file=err)
        return 2
    _emit(config, outcome, out)
    return 0 if outcome.ok else 4


def _emit(config, outcome, out):
    if config.fmt == "json":
        envelope = {"schema": constants.SCHEMA, "command": config.command, "algebra": config.algebra,
                    "result": outcome.payload}
        out.write(json.dumps(envelope, sort_keys=True, indent=2, ensure_ascii=False) + "\n")
    elif config.fmt == "dot":
        out.write(outcome.dot)
    else:
        out.write(outcome.text)


def _bound(config, exact=False):
    return "" if exact else f" (bound μ={config.mu})"


def _indecs(cat, config):
    lines = [f"{label}  dims={''.join(str(d) for d in X.dims)}  string={w}"
             for label, X, w in zip(cat.labels, cat.indecs, cat.strings)]
    payload = {"labels": cat.labels, "dims": [list(X.dims) for X in cat.indecs],
               "strings": [str(w) for w in cat.strings]}
    return Outcome(payload, "\n".join(lines) + "\n")


def _catalog(cat, config):
    width = max(len(label) for label in cat.labels)
    head = " " * width + "  " + " ".join(f"{label:>{width}}" for label in cat.labels)
    lines = []
    for name, table in (("Hom", cat.hom_dims), ("Ext1", cat.ext1_dims)):
        lines += [f"{name}:", head]
        lines += [f"{label:<{width}}  " + " ".join(f"{v:>{width}}" for v in row)
                  for label, row in zip(cat.labels, table.tolist())]
        lines.append("")
    lines.append("tau:")
    lines += [f"{label:<{width}}  {'0' if t is None else cat.labels[t]}" for label, t in zip(cat.labels, cat.tau_of)]
    return Outcome(cat.to_dict(), "\n".join(lines) + "\n")


def _modules(modules, title):
    lines = [f"{title}: {len(modules)}"] + [U.label() for U in modules]
    return Outcome({"count": len(modules), "modules": [U.to_dict() for U in modules]}, "\n".join(lines) + "\n")


def _tau_rigid(cat, config):
    return _modules(enumerate_tau_rigid(cat), "tau-rigid")


def _stautilt(cat, config):
    modules = support_tau_tilting(cat)
    lines = [f"support tau-tilting: {len(modules)}"] + [f"{U.label()}  Fac = {U.fac().label()}" for U in modules]
    payload = {"count": len(modules),
               "modules": [dict(U.to_dict(), fac=U.fac().to_dict()) for U in modules]}
    return Outcome(payload, "\n".join(lines) + "\n")


def _tors(cat, config):
    classes = enumerate_nfold(cat, config.fold, config.side, config.mu, guard=config.subset_guard,
                              workers=config.threads)
    kind = "torsion" if config.side == "tors" else "torsion-free"
    lines = [f"{config.fold}-fold {kind} classes: {len(classes)}{_bound(config, config.fold == 1)}"]
    lines += [C.label() for C in classes]
    payload = {"fold": config.fold, "side": config.side, "mu": config.mu, "count": len(classes),
               "classes": [C.to_dict() for C in classes]}
    return Outcome(payload, "\n".join(lines) + "\n")


def _lattice(cat, config):
    lattice = torsion_lattice(cat)
    lines = [f"torsion classes: {len(lattice)}"]
    lines += [f"{T.label()}  <- {U.label()}" for T, U in zip(lattice.classes, lattice.stt)]
    return Outcome(lattice.to_dict(), "\n".join(lines) + "\n", dot=lattice.to_dot())


def _cok(cat, config):
    U = Subcat.from_labels(cat, config.u)
    report = cok_or_ker_n(U, config.n, "cok", config.mu, report=True)
    text = f"cok_{config.n} {U.label()} = {report.result.label()}{_bound(config, report.exact)}\n"
    return Outcome(report.to_dict(), text)


def _star(cat, config):
    C = Subcat.from_labels(cat, config.subcat)
    verdict = check_star(C)
    if verdict:
        text = f"{C.label()}: true\n"
    else:
        text = f"{C.label()}: false, witness ({verdict.witness[0]}, {verdict.witness[1]})\n"
    payload = {"subcat": C.to_dict(), "ok": verdict.ok,
               "witness": None if verdict else list(verdict.witness)}
    return Outcome(payload, text)


def _bijection(cat, config):
    report = verify_bijection(cat, config.which, config.mu, workers=config.threads)
    lines = [report.summary()] + [f"  failure: {f}" for f in report.failures]
    return Outcome(report.to_dict(), "\n".join(lines) + "\n", ok=report.ok)


def _pair(cat, config):
    U = TauRigidModule.from_labels(cat, config.u)
    if U not in enumerate_tau_rigid(cat):
        raise ValueError(f"{U.label()} is not tau-rigid")
    pair = two_fold_torsion_pair(U, config.mu)
    text = f"({pair.t2.label()}, {pair.t1.label()}; {pair.f2.label()}, {pair.f1.label()})\n"
    return Outcome(pair.to_dict(), text)


def _closure(cat, config):
    C = Subcat.from_labels(cat, config.subcat)
    if config.kind in ("ke", "ce"):
        report = ke_ce_closure(C, config.kind, config.mu)
        result, payload = report.result, report.to_dict()
    else:
        side = "torf" if config.kind == "tf" else "tors"
        result = torsion_closure(C, config.fold, side, config.mu)
        payload = {"input": C.to_dict(), "result": result.to_dict(), "fold": config.fold}
    exact = config.kind in ("tf", "ts") and config.fold == 1
    return Outcome(payload, f"{config.kind} closure of {C.label()} = {result.label()}{_bound(config, exact)}\n")


def _pairing_table(cat, config):
    table = pairing_table(cat, config.mu)
    return Outcome(table.to_dict(), table.to_text())


def _gldim(cat, config):
    d = global_dim(cat.algebra)
    return Outcome({"global_dim": d}, f"global dimension: {'infinite' if d is None else d}\n")


_COMMANDS = {
    "indecs": _indecs,
    "catalog": _catalog,
    "tau-rigid": _tau_rigid,
    "stautilt": _stautilt,
    "tors": _tors,
    "lattice": _lattice,
    "cok": _cok,
    "star": _star,
    "bijection": _bijection,
    "pair": _pair,
    "closure": _closure,
    "pairing-table": _pairing_table,
    "table1": _pairing_table,
    "gldim": _gldim,
}
