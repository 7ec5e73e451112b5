import pytest

from conway_tower import fixtures


@pytest.fixture
def fx():
    return fixtures.load


def trace_components(d):
    """Independent component count: union edges through every passage."""
    parent = {}

    def find(x):
        parent.setdefault(x, x)
        while parent[x] != x:
            x = parent[x]
        return x

    for c in d.crossings:
        for e_in, e_out in ((c.a_in, c.a_out), (c.b_in, c.b_out)):
            parent[find(e_in)] = find(e_out)
    return len({find(e) for e in parent}) + d.free_loops
