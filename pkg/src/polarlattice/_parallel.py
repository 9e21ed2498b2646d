from concurrent.futures import ThreadPoolExecutor
import os

from .errors import ConfigError

ENV_THREADS = "POLARLATTICE_THREADS"


def thread_count():
    raw = os.environ.get(ENV_THREADS, "0").strip() or "0"
    try:
        n = int(raw)
    except ValueError:
        raise ConfigError(f"{ENV_THREADS} must be an integer, got {raw!r}") from None
    if n < 0:
        raise ConfigError(f"{ENV_THREADS} must be >= 0")
    return n or (os.cpu_count() or 1)


def parallel_map(fn, items):
    """Ordered map over ``items``; results come back in input order."""
    items = list(items)
    n = min(thread_count(), max(len(items), 1))
    if n == 1:
        return [fn(x) for x in items]
    with ThreadPoolExecutor(max_workers=n) as pool:
        return list(pool.map(fn, items))
