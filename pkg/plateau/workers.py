import collections
import concurrent.futures
import logging


def partition(total, parts):
    parts = max(1, min(parts, total))
    size, extra = divmod(total, parts)
    ranges = []
    start = 0
    for i in range(parts):
        stop = start + size + (1 if i < extra else 0)
        if stop > start:
            ranges.append((start, stop))
        start = stop
    return ranges


def map_ranges(func, total, workers=1, chunk=None):
    """
    Apply func(start, stop) to consecutive ranges covering [0, total) and
    return the results in range order. With more than one worker the ranges
    run on a thread pool; the results do not depend on the worker count.
    """
    if total <= 0:
        return []
    if chunk is None:
        ranges = partition(total, max(workers, 1))
    else:
        ranges = [(start, min(start + chunk, total))
                  for start in range(0, total, chunk)]
    if workers <= 1 or len(ranges) == 1:
        return [func(start, stop) for start, stop in ranges]
    logging.debug('mapping %d ranges over %d workers', len(ranges), workers)
    with concurrent.futures.ThreadPoolExecutor(max_workers=workers) as pool:
        futures = [pool.submit(func, start, stop) for start, stop in ranges]
        return [future.result() for future in futures]


def merge_histograms(histograms):
    merged = collections.Counter()
    for histogram in histograms:
        merged.update(histogram)
    return dict(merged)
