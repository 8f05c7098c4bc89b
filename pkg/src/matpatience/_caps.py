import os

DEFAULT_CAP = 10


class CapExceededError(ValueError):
    """An exponential enumeration was asked to run beyond its size cap."""


def default_cap():
    """Enumeration cap, overridable through the PATIENCE_CAP environment variable."""
    raw = os.environ.get("PATIENCE_CAP")
    if raw is None or raw == "":
        return DEFAULT_CAP
    try:
        cap = int(raw)
    except ValueError:
        raise ValueError(f"PATIENCE_CAP must be an integer, got {raw!r}") from None
    if cap < 1:
        raise ValueError(f"PATIENCE_CAP must be positive, got {cap}")
    return cap
