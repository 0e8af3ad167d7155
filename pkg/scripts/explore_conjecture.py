"""
This script searches the exhaustive small-graph corpus for tight instances and violations of reg <= match + s.
Requirements:
- EdgeIdealSolvers installed (pip install -e .).
- EIS_results pointing to a writable folder (set by set_env.py).

Steps:
1. Evaluate reg(I(G)^{s}) <= match(G) + s for every graph with at most MAX_N vertices and every 1 <= s <= height.
2. Do the same for the ordinary squarefree powers I(G)^[s], 1 <= s <= match.
3. Save the findings and print a short summary per kind.

Inputs:
- `MAX_N`, `KINDS` below.

Outputs:
- `explore_<kind>_n<=<MAX_N>.json` in EIS_results/reports, listing all tight instances and any violation.
"""
# %% Conjecture exploration
from set_env import get_results_dir, set_environment_variables
set_environment_variables()

import pandas as pd
from batchgenerators.utilities.file_and_folder_operations import join, maybe_mkdir_p
from EdgeIdealSolvers.configuration import default_num_processes
from EdgeIdealSolvers.graph_io.corpus import iter_corpus, parse_corpus_spec
from EdgeIdealSolvers.verification.suite import explore_conjecture, save_report

EIS_results = get_results_dir()

# Configuration
MAX_N = 6
KINDS = ['sqf-symbolic', 'sqf-power']

if __name__ == "__main__":
    report_dir = join(EIS_results, "reports")
    maybe_mkdir_p(report_dir)

    for kind in KINDS:
        spec = parse_corpus_spec(f"enumerate:{MAX_N}")
        report = explore_conjecture(iter_corpus(spec), kind=kind, num_processes=default_num_processes,
                                    corpus_name=str(spec), verbose=True)
        save_report(report, join(report_dir, f"explore_{kind}_n<={MAX_N}.json"))

        tight = pd.DataFrame([{'graph_id': t['graph_id'], 's': t['params']['s'], 'reg': int(t['lhs'])}
                              for t in report.exploration['tight']])
        print(f"{kind}: {len(tight)} tight instance(s), {len(report.exploration['violations'])} violation(s)")
        if len(tight):
            print(tight.groupby('s').size().rename('tight instances').to_string())
        for v in report.exploration['violations']:
            print(f"VIOLATION {v['graph_id']} s={v['params']['s']}: reg {v['lhs']} > {v['rhs']}")
