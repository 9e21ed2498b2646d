"""Physical inputs of a run and their validation."""
from dataclasses import asdict, dataclass, fields
import math

from .errors import DomainError


class ParamError(DomainError):
    """A parameter violates its physical constraint; ``key`` names it."""

    def __init__(self, key, message):
        super().__init__(f"{key}: {message}")
        self.key = key


@dataclass(frozen=True)
class SystemParams:
    """All inputs in eV / Angstrom / e*Angstrom / radians.

    Defaults are the worked example: 2 eV transition, 4 eA dipoles, 2000 A
    lattice, 80 A on-site separation, m = 3 cavity mode. ``L``, ``f_s`` and
    ``J1p`` set to None are derived (resonant mirror spacing, computed
    coupling, J1p = J1).
    """

    omega_A: float = 2.0
    mu: float = 4.0
    a: float = 2000.0
    R_onsite: float = 80.0
    d_sep: float = 80.0
    L: float | None = None
    m: int = 3
    epsilon: float = 1.0
    M: int = 64
    theta: float = 0.0
    Gamma_atom: float = 5e-8
    Gamma_s: float = 1e-7
    gamma_mirror: float = 1e-5
    f_s: float | None = None
    J1p: float | None = None
    flat_exciton: bool = True
    three_mode: bool = False
    k_dependent_f: bool = False

    def __post_init__(self):
        for key in ("omega_A", "a", "R_onsite"):
            if not getattr(self, key) > 0:
                raise ParamError(key, "must be > 0")
        if self.L is not None and not self.L > 0:
            raise ParamError("L", "must be > 0 or auto")
        if self.mu < 0:
            raise ParamError("mu", "must be >= 0")
        if self.d_sep < 0:
            raise ParamError("d_sep", "must be >= 0")
        if int(self.m) != self.m or self.m < 1 or self.m % 2 == 0:
            raise ParamError("m", "m must be odd")
        if int(self.M) != self.M or self.M < 2 or self.M % 2:
            raise ParamError("M", "M must be an even integer >= 2")
        if self.epsilon < 1:
            raise ParamError("epsilon", "must be >= 1")
        if not self.R_onsite < self.a:
            raise ParamError("R_onsite", "R_onsite must be < a")
        for key in ("Gamma_atom", "Gamma_s"):
            if getattr(self, key) < 0:
                raise ParamError(key, "must be >= 0")
        if not self.gamma_mirror > 0:
            raise ParamError("gamma_mirror", "must be > 0")
        if self.f_s is not None and self.f_s < 0:
            raise ParamError("f_s", "must be >= 0 or auto")
        if not math.isfinite(self.theta):
            raise ParamError("theta", "must be finite")
        object.__setattr__(self, "m", int(self.m))
        object.__setattr__(self, "M", int(self.M))

    def to_dict(self):
        return asdict(self)

    @classmethod
    def keys(cls):
        return [f.name for f in fields(cls)]
