"""Hook-length statistics of t-regular partitions and a checker for the
2-hook bias b_{4,2}(n) >= b_{3,2}(n)."""

from .hooks import b_tk, bias_table, count_k_hooks, hook_grid
from .partitions import Partition, enumerate_t_regular, is_t_regular, make_partition
from .report import VerificationReport

__all__ = [
    "Partition", "make_partition", "is_t_regular", "enumerate_t_regular",
    "hook_grid", "count_k_hooks", "b_tk", "bias_table",
    "VerificationReport",
]
__version__ = "0.1.0"
