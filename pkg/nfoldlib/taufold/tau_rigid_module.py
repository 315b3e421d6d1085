from dataclasses import dataclass

from nfoldlib.repcore import direct_sum
from nfoldlib.subcat import Subcat, fac_or_sub_closure


@dataclass(frozen=True)
class TauRigidModule:
    """
    A basic module given by its indecomposable summands.

    Parameters
    ----------
    catalog : IndecCatalog
        The catalog the indices refer to.
    indices : tuple of int
        Sorted catalog indices, each summand once.
    """
    catalog: object
    indices: tuple

    def __post_init__(self):
        indices = tuple(sorted(int(i) for i in self.indices))
        if len(set(indices)) != len(indices):
            raise ValueError(f"summands repeat: {indices}")
        object.__setattr__(self, "indices", indices)

    @classmethod
    def from_subcat(cls, C):
        return cls(C.cat, tuple(C.indices))

    @classmethod
    def from_labels(cls, cat, text):
        return cls.from_subcat(Subcat.from_labels(cat, text))

    def __len__(self):
        return len(self.indices)

    def __eq__(self, other):
        return (isinstance(other, TauRigidModule) and other.catalog is self.catalog
                and other.indices == self.indices)

    def __hash__(self):
        return hash((id(self.catalog), self.indices))

    def label(self):
        """``0`` for the zero module, else ``P1+P2``."""
        if not self.indices:
            return "0"
        return "+".join(self.catalog.labels[i] for i in self.indices)

    def __repr__(self):
        return f"TauRigidModule({self.label()})"

    @property
    def subcat(self):
        return Subcat.from_indices(self.catalog, self.indices)

    @property
    def module(self):
        return direct_sum(*[self.catalog.indecs[i] for i in self.indices], algebra=self.catalog.algebra)

    def fac(self):
        return fac_or_sub_closure(self.subcat, "fac")

    def sort_key(self):
        return len(self.indices), self.indices

    def to_dict(self):
        return {"label": self.label(), "indices": list(self.indices)}
