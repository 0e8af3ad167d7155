"""
This script recomputes the regularity of the standard small examples and shows how close each one is to the bounds.
Requirements:
- EdgeIdealSolvers installed (pip install -e .).

Steps:
1. Build each example ideal (edge ideal, I(G)^[s] or I(G)^{s}).
2. Compute its Betti table over Q and read off the regularity.
3. Print one summary table and save it as JSON.

Inputs:
- `EXAMPLES` below: (label, graph argument as accepted by the CLI, kind, s).

Outputs:
- `named_examples.json` in EIS_results/reports.
"""
# %% Named examples
from set_env import get_results_dir, set_environment_variables
set_environment_variables()

import pandas as pd
from batchgenerators.utilities.file_and_folder_operations import join, maybe_mkdir_p, save_json
from EdgeIdealSolvers.cli import ideal_of_kind
from EdgeIdealSolvers.graph_io.corpus import parse_graph_argument
from EdgeIdealSolvers.graphs.invariants import classify
from EdgeIdealSolvers.ideals.sqf_ideal import generator_degrees
from EdgeIdealSolvers.regularity.betti_table import betti_table

EIS_results = get_results_dir()

# Configuration
EXAMPLES = [
    ('P4, second symbolic', 'path:4', 'sqf-symbolic', 2),
    ('K3, second symbolic', 'complete:3', 'sqf-symbolic', 2),
    ('paw, second power', 'g6:C{', 'sqf-power', 2),
    ('paw, second symbolic', 'g6:C{', 'sqf-symbolic', 2),
    ('C5, third symbolic', 'cycle:5', 'sqf-symbolic', 3),
    ('K3,5, edge ideal', 'kbip:3,5', 'edge', None),
    ('K3,5, third symbolic', 'kbip:3,5', 'sqf-symbolic', 3),
    ('two triangles, third symbolic', 'startri:2', 'sqf-symbolic', 3),
]

rows = []
for label, graph, kind, s in EXAMPLES:
    g = parse_graph_argument(graph)
    inv = classify(g)
    J = ideal_of_kind(g, kind, s)
    table = betti_table(J)
    degrees = generator_degrees(J)
    rows.append({
        'example': label,
        'n': g.n,
        's': s if s is not None else 1,
        'generators': len(J.masks),
        'max_degree': degrees.max_degree,
        'reg': table.reg_ideal,
        'match+s': inv.match + (s or 1),
        'ind_match+s': inv.ind_match + (s or 1),
        'ord_match+s': inv.ord_match + (s or 1),
    })

frame = pd.DataFrame(rows).set_index('example')
print(frame.to_string())

report_dir = join(EIS_results, "reports")
maybe_mkdir_p(report_dir)
save_json(rows, join(report_dir, "named_examples.json"), sort_keys=False)
