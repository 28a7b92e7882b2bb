from hypothesis import strategies as st

from hookbias.partitions import make_partition


def partitions(max_part=20, max_len=10, t=None):
    parts = st.integers(1, max_part)
    if t is not None:
        parts = parts.filter(lambda x: x % t)
    return st.lists(parts, max_size=max_len).map(make_partition)
