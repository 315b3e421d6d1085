import os
from dataclasses import dataclass

from nfoldlib import constants

COMMANDS = ("indecs", "catalog", "tau-rigid", "stautilt", "tors", "lattice", "cok", "star", "bijection", "pair",
            "closure", "pairing-table", "table1", "gldim")
DOT_COMMANDS = ("lattice",)
FORMATS = ("text", "json", "dot")


@dataclass
class RunConfig:
    """
    Everything one ``taufold`` run depends on.

    Parameters
    ----------
    algebra : str
        Bundled algebra name or path of an algebra file.
    command : str
        One of ``COMMANDS``.
    fold : int
        Fold n of ``tors`` and ``closure``.
    side : str
        ``tors`` or ``torf``.
    mu : int
        Multiplicity bound of the censuses.
    fmt : str
        ``text``, ``json`` or ``dot`` (``lattice`` only).
    u, subcat : str
        Module and subcategory labels, e.g. ``P2+S3``.
    n : int
        Index k of ``cok``.
    which : str
        Bijection checked by ``bijection``.
    kind : str
        ``ke``, ``ce``, ``tf`` or ``ts`` for ``closure``.
    seed : int
        Seed of the randomized isomorphism search.
    threads : int
        Worker threads; defaults to ``$TAUFOLD_THREADS`` or 1.
    subset_guard : int
        Largest subset search of ``tors``.
    verbose : int
        0 logs warnings, 1 info, 2 and above debug.
    """
    algebra: str
    command: str
    fold: int = 1
    side: str = "tors"
    mu: int = constants.MU
    fmt: str = "text"
    u: str = ""
    subcat: str = ""
    n: int = 1
    which: str = "main"
    kind: str = "ke"
    seed: int = constants.SEED
    threads: int = None
    subset_guard: int = constants.SUBSET_GUARD
    verbose: int = 0

    def __post_init__(self):
        if self.threads is None:
            self.threads = int(os.environ.get(constants.THREADS_ENV, "1"))

    def validate(self):
        """
        Raises
        ------
        ValueError
            On an unknown command, side, kind or format, DOT output for a command without a graph, or a bound out of
            range.
        """
        if self.command not in COMMANDS:
            raise ValueError(f"unknown command {self.command!r}")
        if self.fmt not in FORMATS:
            raise ValueError(f"unknown format {self.fmt!r}")
        if self.fmt == "dot" and self.command not in DOT_COMMANDS:
            raise ValueError(f"--format dot is only available for {', '.join(DOT_COMMANDS)}, not {self.command}")
        if self.side not in ("tors", "torf"):
            raise ValueError(f"unknown side {self.side!r}")
        if self.kind not in ("ke", "ce", "tf", "ts"):
            raise ValueError(f"unknown closure kind {self.kind!r}")
        if self.mu < 1:
            raise ValueError(f"--mu must be at least 1, got {self.mu}")
        if self.fold < 1:
            raise ValueError(f"--fold must be at least 1, got {self.fold}")
        if self.n < 0:
            raise ValueError(f"--n must be nonnegative, got {self.n}")
        if self.threads < 1:
            raise ValueError(f"thread count must be at least 1, got {self.threads}")
        if self.command in ("cok", "pair") and not self.u:
            raise ValueError(f"{self.command} needs --u")
        if self.command in ("star", "closure") and not self.subcat:
            raise ValueError(f"{self.command} needs --subcat")
        return self
