"""
This script verifies the whole check catalog on the exhaustive small-graph corpora.
Requirements:
- EdgeIdealSolvers installed (pip install -e .).
- EIS_results pointing to a writable folder (set by set_env.py).

Steps:
1. Run every check on all graphs with at most 5 vertices.
2. Run the identity and bound checks on all 156 graphs with 6 vertices (parallel over graphs).
3. Save both reports as JSON and print the per-check totals.

Inputs:
- `MAX_N_ALL_CHECKS`, `N_SUBSET`, `SUBSET_CHECKS`, `SEED` below.

Outputs:
- `verify_all_checks_n<=5.json`, `verify_subset_n=6.json` and a timestamped log file in EIS_results/reports.
"""
# %% Exhaustive verification
from datetime import datetime
from set_env import get_results_dir, set_environment_variables
set_environment_variables()

from batchgenerators.utilities.file_and_folder_operations import join, maybe_mkdir_p
from EdgeIdealSolvers.configuration import default_num_processes
from EdgeIdealSolvers.graph_io.corpus import iter_corpus, parse_corpus_spec
from EdgeIdealSolvers.verification.checks import CHECKS
from EdgeIdealSolvers.verification.suite import report_to_frame, run_suite, save_report

EIS_results = get_results_dir()

# Configuration
MAX_N_ALL_CHECKS = 5
N_SUBSET = 6
SUBSET_CHECKS = ['chk-del', 'chk-intsec', 'chk-ttsym', 'chk-prop-zero', 'chk-sym2', 'chk-conj']
SEED = 12345

if __name__ == "__main__":
    # the spawn workers re-import this module, so the run must stay behind the main guard
    report_dir = join(EIS_results, "reports")
    maybe_mkdir_p(report_dir)
    timestamp = datetime.now()
    log_file = join(report_dir, "verify_%d_%d_%d_%02.0d_%02.0d_%02.0d.txt" %
                    (timestamp.year, timestamp.month, timestamp.day, timestamp.hour, timestamp.minute, timestamp.second))

    runs = [
        (f"verify_all_checks_n<={MAX_N_ALL_CHECKS}.json", f"enumerate:{MAX_N_ALL_CHECKS}", list(CHECKS),
         lambda g: True),
        (f"verify_subset_n={N_SUBSET}.json", f"enumerate:{N_SUBSET}", SUBSET_CHECKS, lambda g: g.n == N_SUBSET),
    ]

    total_failures = 0
    for file_name, corpus_text, check_ids, keep in runs:
        spec = parse_corpus_spec(corpus_text)
        graphs = [g for g in iter_corpus(spec) if keep(g)]
        print(f"{corpus_text}: {len(graphs)} graphs, {len(check_ids)} checks")
        report = run_suite(graphs, check_ids, num_processes=default_num_processes, seed=SEED, corpus_name=str(spec),
                           log_file=log_file, verbose=True)
        save_report(report, join(report_dir, file_name))
        print(report_to_frame(report).to_string())
        total_failures += report.num_failures

    print(f"Done. {total_failures} failure(s). Reports in {report_dir}")

