from collections.abc import Iterable

import numpy as np


def recursive_fix_for_json_export(my_dict: dict):
    # json chokes on numpy scalars, tuple keys and sets. Reports carry all three (Betti entries are keyed by (i, j),
    # vertex sets are frozensets), so we fix them in place before save_json
    keys = list(my_dict.keys())  # cannot iterate over keys() if we change keys
    for k in keys:
        if isinstance(k, (np.integer,)):
            my_dict[int(k)] = my_dict.pop(k)
            k = int(k)
        elif isinstance(k, tuple):
            new_k = ",".join(str(int(i)) for i in k)
            my_dict[new_k] = my_dict.pop(k)
            k = new_k

        value = my_dict[k]
        if isinstance(value, dict):
            recursive_fix_for_json_export(value)
        elif isinstance(value, np.ndarray):
            assert value.ndim == 1, 'only 1d arrays are supported'
            my_dict[k] = fix_types_iterable(value, output_type=list)
        elif isinstance(value, (np.bool_,)):
            my_dict[k] = bool(value)
        elif isinstance(value, np.integer):
            my_dict[k] = int(value)
        elif isinstance(value, (set, frozenset)):
            my_dict[k] = sorted(fix_types_iterable(value, output_type=list))
        elif isinstance(value, (list, tuple)):
            my_dict[k] = fix_types_iterable(value, output_type=list)
        else:
            pass


def fix_types_iterable(iterable, output_type):
    out = []
    for i in iterable:
        if isinstance(i, np.integer):
            out.append(int(i))
        elif isinstance(i, np.bool_):
            out.append(bool(i))
        elif isinstance(i, dict):
            recursive_fix_for_json_export(i)
            out.append(i)
        elif isinstance(i, str):
            out.append(i)
        elif isinstance(i, (set, frozenset)):
            out.append(sorted(fix_types_iterable(i, list)))
        elif isinstance(i, Iterable):
            out.append(fix_types_iterable(i, list))
        else:
            out.append(i)
    return output_type(out)
