"""Brute-force reference implementations used to cross-check the fast paths.

Everything here is written as plain nested loops over Python lists, on
purpose: the point is to share no code (and therefore no bugs) with the
numpy implementations under test.
"""


def as_grid(img):
    """Copy any 2-D pixel source into a list of lists of ints."""
    return [[int(v) for v in row] for row in img]


def brute_candidates(img, x0, y0, x1, y1):
    """Zero pixels inside the box whose four neighbours are all zero, row-major."""
    grid = as_grid(img)
    height, width = len(grid), len(grid[0])
    sites = []
    for y in range(y0, y1 + 1):
        for x in range(x0, x1 + 1):
            if x < 1 or x > width - 2 or y < 1 or y > height - 2:
                continue
            if grid[y][x] != 0:
                continue
            if grid[y - 1][x] or grid[y + 1][x] or grid[y][x - 1] or grid[y][x + 1]:
                continue
            sites.append((x, y))
    return sites


def brute_isolated_nonzero(img):
    """Extraction predicate over the whole interior, row-major."""
    grid = as_grid(img)
    height, width = len(grid), len(grid[0])
    sites = []
    for y in range(1, height - 1):
        for x in range(1, width - 1):
            if grid[y][x] == 0:
                continue
            if grid[y - 1][x] or grid[y + 1][x] or grid[y][x - 1] or grid[y][x + 1]:
                continue
            sites.append((x, y))
    return sites


def brute_extract(img):
    """Reference extraction: (message bytes, restored grid)."""
    grid = as_grid(img)
    message = []
    for x, y in brute_isolated_nonzero(img):
        message.append(grid[y][x])
        grid[y][x] = 0
    return bytes(message), grid


def brute_ambiguous(img):
    """Carrier check: nonzero pixels whose in-bounds neighbours are all zero."""
    grid = as_grid(img)
    height, width = len(grid), len(grid[0])
    sites = []
    for y in range(height):
        for x in range(width):
            if grid[y][x] == 0:
                continue
            neighbours = ((x - 1, y), (x + 1, y), (x, y - 1), (x, y + 1))
            if all(
                grid[ny][nx] == 0
                for nx, ny in neighbours
                if 0 <= nx < width and 0 <= ny < height
            ):
                sites.append((x, y))
    return sites


def brute_greedy_sites(img, x0, y0, x1, y1):
    """Sequential embedding simulation: write a sentinel at each usable site.

    Walks the ROI row-major, re-checks the predicate against the evolving
    working grid, and marks every accepted site nonzero before moving on.
    The accepted sites, in order, are the true capacity of one pass.
    """
    grid = as_grid(img)
    height, width = len(grid), len(grid[0])
    sites = []
    for y in range(y0, y1 + 1):
        for x in range(x0, x1 + 1):
            if x < 1 or x > width - 2 or y < 1 or y > height - 2:
                continue
            if grid[y][x] != 0:
                continue
            if grid[y - 1][x] or grid[y + 1][x] or grid[y][x - 1] or grid[y][x + 1]:
                continue
            grid[y][x] = 255  # any nonzero sentinel disqualifies neighbours
            sites.append((x, y))
    return sites


def brute_rle(sequence):
    """Reference run-length encoding of a flat sequence."""
    runs = []
    for value in sequence:
        value = int(value)
        if runs and runs[-1][0] == value:
            runs[-1][1] += 1
        else:
            runs.append([value, 1])
    return [(value, length) for value, length in runs]


def brute_rle_expand(runs):
    """Reference run-length decoding back to a flat list."""
    out = []
    for value, length in runs:
        out.extend([int(value)] * int(length))
    return out


def brute_mse(a, b):
    """Reference mean squared error over two equal-shaped pixel sources."""
    total = 0
    count = 0
    for row_a, row_b in zip(as_grid(a), as_grid(b)):
        for va, vb in zip(row_a, row_b):
            total += (va - vb) ** 2
            count += 1
    return total / count


def parse_container(data):
    """Independent SRLE parser; returns (width, height, [(value, length), ...]).

    Written directly against the documented byte layout with int.from_bytes,
    so it validates serializer output without reusing its code.
    """
    assert data[0:4] == b"SRLE", "magic"
    assert data[4] == 1, "version"
    width = int.from_bytes(data[5:9], "little")
    height = int.from_bytes(data[9:13], "little")
    count = int.from_bytes(data[13:17], "little")
    assert len(data) == 17 + 5 * count, "container size"
    runs = []
    for i in range(count):
        offset = 17 + 5 * i
        value = data[offset]
        length = int.from_bytes(data[offset + 1 : offset + 5], "little")
        runs.append((value, length))
    return width, height, runs
