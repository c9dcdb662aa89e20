# Memoization of per-(type, rank) tables, e.g. positive roots.
import functools

_registry = []


def table_cache(func):
    """Cache a pure table builder; ``clear_tables`` empties every such cache."""
    cached = functools.lru_cache(maxsize=None)(func)
    _registry.append(cached)
    return cached


def clear_tables() -> None:
    for cached in _registry:
        cached.cache_clear()


def table_stats() -> dict:
    return {'%s.%s' % (f.__module__, f.__name__): f.cache_info()._asdict() for f in _registry}
