from concurrent.futures import ProcessPoolExecutor
from typing import Callable, Iterable, TypeVar

from tqdm.auto import tqdm

T = TypeVar("T")
R = TypeVar("R")


def parallel_map(
    fn: Callable[[T], R], items: Iterable[T], n_jobs: int = 1, progress: bool = False, desc: str | None = None
) -> list[R]:
    """
    Apply ``fn`` to every item, in worker processes when ``n_jobs > 1``.

    The results are returned in the order of ``items`` whatever the number of workers, so the output only depends on
    the input. ``fn`` and the items must be picklable when ``n_jobs > 1``.

    Args:
        fn: The function to apply.
        items: The inputs.
        n_jobs: Number of worker processes (1 runs in the calling process).
        progress: Display a tqdm progress bar.
        desc: Label of the progress bar.
    """
    items = list(items)
    if n_jobs <= 1 or len(items) <= 1:
        return [fn(item) for item in tqdm(items, desc=desc, disable=not progress)]
    with ProcessPoolExecutor(max_workers=n_jobs) as executor:
        chunksize = max(1, len(items) // (4 * n_jobs))
        results = executor.map(fn, items, chunksize=chunksize)
        return list(tqdm(results, total=len(items), desc=desc, disable=not progress))
