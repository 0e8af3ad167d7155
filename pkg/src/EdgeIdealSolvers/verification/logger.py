import sys
from datetime import datetime
from time import sleep, time
from typing import Optional


class VerificationLogger(object):
    """
    Bookkeeping of a corpus run: one entry per corpus graph for each of the keys below. Entries are logged in corpus
    order after the (possibly parallel) evaluation, so index k always refers to the k-th graph of the corpus.
    """
    def __init__(self, log_file: Optional[str] = None, verbose: bool = False):
        self.my_logging = {
            'graph_ids': list(),
            'n_results': list(),
            'n_failures': list(),
            'n_skipped': list(),
        }
        self.log_file = log_file
        self.verbose = verbose

    def log(self, key, value, graph_index: int):
        assert key in self.my_logging.keys() and isinstance(self.my_logging[key], list), \
            'This function is only intended to log stuff to lists and to have one entry per graph'

        if self.verbose:
            print(f'logging {key}: {value} for graph {graph_index}')

        if len(self.my_logging[key]) < (graph_index + 1):
            assert len(self.my_logging[key]) == graph_index, f'graph {graph_index} logged before its predecessors ' \
                                                             f'for key {key}'
            self.my_logging[key].append(value)
        else:
            print(f'overwriting {key} for graph {graph_index}: {self.my_logging[key][graph_index]} -> {value}')
            self.my_logging[key][graph_index] = value

    def print_to_log_file(self, *args, also_print_to_console=True, add_timestamp=True):
        timestamp = time()
        dt_object = datetime.fromtimestamp(timestamp)

        if add_timestamp:
            args = (f"{dt_object}:", *args)

        if self.log_file is not None:
            successful = False
            max_attempts = 5
            ctr = 0
            while not successful and ctr < max_attempts:
                try:
                    with open(self.log_file, 'a+') as f:
                        for a in args:
                            f.write(str(a))
                            f.write(" ")
                        f.write("\n")
                    successful = True
                except IOError:
                    print(f"{datetime.fromtimestamp(timestamp)}: failed to log: ", sys.exc_info())
                    sleep(0.5)
                    ctr += 1
        if also_print_to_console:
            print(*args)

    def get_checkpoint(self):
        return self.my_logging
