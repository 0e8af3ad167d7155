import os


def get_allowed_n_proc() -> int:
    """
    Number of worker processes used for corpus runs and parallel Hochster scans.

    If the environment variable EIS_n_proc is set it overwrites the default of 8. The value is always capped at the
    number of CPUs of the machine.
    """
    if 'EIS_n_proc' in os.environ.keys():
        use_this = int(os.environ['EIS_n_proc'])
    else:
        use_this = 8
    use_this = max(1, min(use_this, os.cpu_count() or 1))
    return use_this


default_num_processes = get_allowed_n_proc()

MAX_AMBIENT_VARIABLES = 63  # supports are int bitmasks; beyond this we refuse
MAX_ENUMERATION_ORDER = 6  # 2^15 masks x 720 permutations is still fine, n = 7 is not
MAX_GRAPH6_ORDER = 62  # single byte size field of graph6

DEFAULT_SEED = 12345
DEFAULT_CHARACTERISTIC = 0

# induced subgraph sampling for the Betti monotonicity check
BETTI_MONO_EXHAUSTIVE_ORDER = 5
BETTI_MONO_SAMPLES = 20
