"""utils.py

This file contains helpers shared by the law sweeps."""

# Get packages.
import logging
from itertools import product
from typing import Callable, Iterable, List, Sequence, TypeVar
from tqdm import tqdm
from tqdm.contrib.concurrent import thread_map

# User defined modules.
from enriched_workbench.config import get_config

# Set up logging.
logger = logging.getLogger(__name__)

T = TypeVar("T")
R = TypeVar("R")


def sweep(func: Callable[[T], R], items: Iterable[T],
          desc: str = "Checking") -> List[R]:
    """
    Evaluate `func` on every item, optionally on a thread pool.

    Results are returned in input order whatever the thread count.

    Args:
        func (Callable): The check to run on one instance.
        items (Iterable): The independent instances.
        desc (str): The progress bar label.

    Returns:
        list: One result per item.
    """
    items = list(items)
    config = get_config()
    logger.debug("%s: %d instances on %d thread(s).",
                 desc, len(items), config.threads)
    if config.threads > 1 and len(items) > 1:
        return list(thread_map(func, items, max_workers=config.threads,
                               desc=desc, unit="case",
                               disable=not config.progress))
    return [func(item) for item in tqdm(items, desc=desc, unit="case",
                                        disable=not config.progress)]


def tuples(objects: Sequence[T], length: int) -> List[tuple]:
    """All ordered tuples of the given length drawn from `objects`."""
    return list(product(objects, repeat=length))
