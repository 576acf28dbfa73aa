"""Pure-Python hot kernels: parent-distance tables and the window matcher.

This module is the fallback twin of the compiled ``ctswap._ckernels``
extension; both expose the same functions with identical semantics,
including the comparison counter. The counter increments once per key
comparison in the monotone-stack scans and once per table-entry comparison
in the equality scans, and both backends must report identical counts on
identical inputs (checked in tests/test_backends.py).

Key comparisons implement the lenient total order (ties broken by the
earlier position being smaller): nearest-smaller-to-the-left scans stop at
an equal key (<=), nearest-smaller-to-the-right scans pop it (>=). On
distinct keys this coincides with the strict order, and strict tie mode is
enforced by the callers with an upfront duplicate scan.
"""

from __future__ import annotations

BACKEND = "python"

KIND_EXACT = 0
KIND_SWAP = 1
ORIENT_WINDOW = 0
ORIENT_PATTERN = 1


def forward_pd(keys):
    """Distance to the nearest smaller key on the left, 0 if none."""
    table, _ = forward_pd_counted(keys)
    return table


def reverse_pd(keys):
    """Distance to the nearest smaller key on the right, 0 if none."""
    table, _ = reverse_pd_counted(keys)
    return table


def forward_pd_counted(keys, start=0, length=None):
    n = len(keys) - start if length is None else length
    out = [0] * n
    stack = []  # indices into out/span, keys strictly increasing bottom to top
    comps = 0
    for i in range(n):
        k = keys[start + i]
        while stack:
            comps += 1
            if keys[start + stack[-1]] > k:
                stack.pop()
            else:
                break
        out[i] = i - stack[-1] if stack else 0
        stack.append(i)
    return out, comps


def reverse_pd_counted(keys, start=0, length=None):
    n = len(keys) - start if length is None else length
    out = [0] * n
    stack = []
    comps = 0
    for i in range(n - 1, -1, -1):
        k = keys[start + i]
        while stack:
            comps += 1
            if keys[start + stack[-1]] >= k:
                stack.pop()
            else:
                break
        out[i] = stack[-1] - i if stack else 0
        stack.append(i)
    return out, comps


def _prefix_mismatch(a, b, m):
    """1-based index of the first differing entry, 0 if equal; counts compares."""
    for j in range(m):
        if a[j] != b[j]:
            return j + 1, j + 1
    return 0, m


def _suffix_mismatch(a, b, m):
    """1-based index of the last differing entry, 0 if equal; counts compares."""
    for j in range(m - 1, -1, -1):
        if a[j] != b[j]:
            return j + 1, m - j
    return 0, m


def _tables_equal(a, b, m):
    for j in range(m):
        if a[j] != b[j]:
            return False, j + 1
    return True, m


def swap_candidates(f, r, m):
    """Candidate swap positions from the mismatch pincer.

    ``f`` is the first forward-table mismatch, ``r`` the last reverse-table
    mismatch (both 1-based). A gap of two pins the position, a gap of zero
    pins it on the other side, a gap of one leaves two candidates, anything
    wider disqualifies the pair.
    """
    if r == f + 1:
        return (f,)
    if r == f - 1:
        return (r,)
    if r == f:
        return tuple(i for i in (f - 1, f) if 1 <= i <= m - 1)
    return ()


def scan_windows(text, pattern, exact_only=False):
    """Slide the pattern over the text and classify every window.

    Returns ``(count, hits, comparisons)`` where hits is a list of
    ``(position, kind, swap_position, orientation)`` tuples with 1-based
    window and swap positions. Each window is recomputed from scratch in
    O(m); a non-exact window yields at most two candidate swap positions,
    each confirmed by comparing the parent-distance table of the swapped
    window against the pattern's (and the swapped pattern's against the
    window's), so per-window work stays O(m).
    """
    n = len(text)
    m = len(pattern)
    comps = 0
    hits = []
    if m == 0 or n < m:
        return 0, hits, 0

    pd_p, c = forward_pd_counted(pattern)
    comps += c
    rpd_p, c = reverse_pd_counted(pattern)
    comps += c

    swapped = [0.0] * m
    for j0 in range(n - m + 1):
        pd_w, c = forward_pd_counted(text, j0, m)
        comps += c
        rpd_w, c = reverse_pd_counted(text, j0, m)
        comps += c

        f, c = _prefix_mismatch(pd_p, pd_w, m)
        comps += c
        if f == 0:
            hits.append((j0 + 1, KIND_EXACT, 0, 0))
            continue
        if exact_only:
            continue

        r, c = _suffix_mismatch(rpd_p, rpd_w, m)
        comps += c
        if r == 0:
            continue

        for i in swap_candidates(f, r, m):
            swapped[:] = text[j0 : j0 + m]
            swapped[i - 1], swapped[i] = swapped[i], swapped[i - 1]
            pd_y, c = forward_pd_counted(swapped)
            comps += c
            ok, c = _tables_equal(pd_y, pd_p, m)
            comps += c
            if ok:
                hits.append((j0 + 1, KIND_SWAP, i, ORIENT_WINDOW))
                break

            swapped[:] = pattern
            swapped[i - 1], swapped[i] = swapped[i], swapped[i - 1]
            pd_z, c = forward_pd_counted(swapped)
            comps += c
            ok, c = _tables_equal(pd_z, pd_w, m)
            comps += c
            if ok:
                hits.append((j0 + 1, KIND_SWAP, i, ORIENT_PATTERN))
                break

    return len(hits), hits, comps
