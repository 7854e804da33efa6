import os
from dataclasses import dataclass, replace

MODES = ("trust", "verify")


@dataclass(frozen=True)
class SolverSettings:
    """
    Solver configuration.

    attributes:
        mode: 'trust' skips the promise check, 'verify' runs check_promise first
        parallel: number of worker threads evaluating branches (1 = sequential)
        debug: re-run safe elimination to fixpoint and replay trails
        rejection_budget: attempts before random_rejection gives up
    """

    mode: str = "trust"
    parallel: int = 1
    debug: bool = False
    rejection_budget: int = 10_000

    def __post_init__(self):
        if self.mode not in MODES:
            raise ValueError(f"mode must be one of {MODES}, got {self.mode!r}")
        if self.parallel < 1:
            raise ValueError("parallel must be at least 1")

    @classmethod
    def from_env(cls, environ=None) -> "SolverSettings":
        """Build settings from HEPTACOL_* environment variables."""
        environ = os.environ if environ is None else environ
        kwargs = {}
        if "HEPTACOL_MODE" in environ:
            kwargs["mode"] = environ["HEPTACOL_MODE"].strip().lower()
        if "HEPTACOL_PARALLEL" in environ:
            kwargs["parallel"] = int(environ["HEPTACOL_PARALLEL"])
        if "HEPTACOL_DEBUG" in environ:
            kwargs["debug"] = environ["HEPTACOL_DEBUG"].strip().lower() in ("1", "true", "yes")
        return cls(**kwargs)

    def override(self, **changes) -> "SolverSettings":
        """Return a copy with the non-None entries of changes applied."""
        return replace(self, **{k: v for k, v in changes.items() if v is not None})
