import multiprocessing
import os
from dataclasses import dataclass, field
from time import sleep, time
from typing import Iterable, List, Optional, Sequence, Tuple

import pandas as pd
from batchgenerators.utilities.file_and_folder_operations import maybe_mkdir_p, save_json
from tqdm import tqdm

from EdgeIdealSolvers import __version__
from EdgeIdealSolvers.configuration import DEFAULT_SEED
from EdgeIdealSolvers.graphs.graph import Graph
from EdgeIdealSolvers.homology.field_rank import FieldSpec
from EdgeIdealSolvers.utilities.exceptions import ParameterError
from EdgeIdealSolvers.utilities.json_export import recursive_fix_for_json_export
from EdgeIdealSolvers.verification.check_result import FAIL, PASS, SKIPPED, CheckResult
from EdgeIdealSolvers.verification.checks import CHECKS, GraphContext, run_checks_on_graph
from EdgeIdealSolvers.verification.logger import VerificationLogger

EXPLORE_KINDS = ('sqf-symbolic', 'sqf-power')


@dataclass
class CheckSummary:
    check_id: str
    passed: int = 0
    failed: int = 0
    skipped: int = 0
    failures: List[CheckResult] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            'check_id': self.check_id,
            'pass': self.passed,
            'fail': self.failed,
            'skip': self.skipped,
            'failures': [f.to_dict() for f in self.failures],
        }


@dataclass
class Report:
    corpus: str
    seed: int
    checks: List[CheckSummary] = field(default_factory=list)
    wall_ms: int = 0
    tool_version: str = __version__
    exploration: Optional[dict] = None
    # per-graph counts from the run logger, saved next to the report by save_report
    per_graph: Optional[dict] = None

    @property
    def num_failures(self) -> int:
        return sum(c.failed for c in self.checks)

    def to_dict(self) -> dict:
        out = {
            'tool_version': self.tool_version,
            'corpus': self.corpus,
            'seed': self.seed,
            'checks': [c.to_dict() for c in self.checks],
            'wall_ms': self.wall_ms,
        }
        if self.exploration is not None:
            out['exploration'] = self.exploration
        return out


def summarize(results: Iterable[CheckResult], check_ids: Sequence[str]) -> List[CheckSummary]:
    """Per-check totals in the order of check_ids. Checks without any result (empty corpus) are left out."""
    summaries = {cid: CheckSummary(cid) for cid in check_ids}
    seen = set()
    for r in results:
        s = summaries[r.check_id]
        seen.add(r.check_id)
        if r.status == PASS:
            s.passed += 1
        elif r.status == FAIL:
            s.failed += 1
            s.failures.append(r)
        else:
            s.skipped += 1
    for s in summaries.values():
        s.failures.sort(key=lambda r: r.sort_key)
    return [summaries[cid] for cid in check_ids if cid in seen]


def report_to_frame(report: Report) -> pd.DataFrame:
    """Human-readable totals, one row per check."""
    rows = [[c.check_id, c.passed, c.failed, c.skipped] for c in report.checks]
    return pd.DataFrame(rows, columns=['check_id', 'pass', 'fail', 'skip']).set_index('check_id')


def per_graph_file(out: str) -> str:
    base, _ = os.path.splitext(out)
    return base + "_per_graph.json"


def save_report(report: Report, out: str):
    """Writes the report JSON to out and, when the run logged per-graph counts, those to per_graph_file(out)."""
    maybe_mkdir_p(os.path.dirname(os.path.abspath(out)))
    d = report.to_dict()
    recursive_fix_for_json_export(d)
    save_json(d, out, sort_keys=False)
    if report.per_graph is not None:
        save_json(report.per_graph, per_graph_file(out), sort_keys=False)


def _evaluate_corpus(graphs: List[Graph], worker, worker_args: Tuple, num_processes: int,
                     verbose: bool) -> List[List[CheckResult]]:
    if num_processes <= 1 or len(graphs) <= 1:
        return [worker(g, *worker_args) for g in tqdm(graphs, disable=not verbose)]

    r = []
    with multiprocessing.get_context("spawn").Pool(num_processes) as p:
        remaining = list(range(len(graphs)))
        # killed workers get respawned by the pool but never pick up work again, so keep the original ones
        workers = [j for j in p._pool]
        for g in graphs:
            r.append(p.starmap_async(worker, ((g, *worker_args),)))

        with tqdm(desc=None, total=len(graphs), disable=not verbose) as pbar:
            while len(remaining) > 0:
                all_alive = all([j.is_alive() for j in workers])
                if not all_alive:
                    raise RuntimeError('One of the background workers of the corpus run is gone. This usually means '
                                       'it was killed by the OS, most likely because it ran out of memory. Reduce '
                                       'the number of workers (--jobs or EIS_n_proc) or the corpus size and try '
                                       'again.')
                done = [i for i in remaining if r[i].ready()]
                for _ in done:
                    pbar.update()
                remaining = [i for i in remaining if i not in done]
                sleep(0.1)
        # get() re-raises worker exceptions
        return [r[i].get()[0] for i in range(len(graphs))]


def _log_results(logger: VerificationLogger, graphs: List[Graph], per_graph: List[List[CheckResult]]):
    for k, (g, results) in enumerate(zip(graphs, per_graph)):
        graph_id = results[0].graph_id if results else f"n={g.n},m={g.num_edges}"
        logger.log('graph_ids', graph_id, k)
        logger.log('n_results', len(results), k)
        logger.log('n_failures', sum(r.status == FAIL for r in results), k)
        logger.log('n_skipped', sum(r.status == SKIPPED for r in results), k)


def run_suite(corpus: Iterable[Graph], check_ids: Sequence[str], num_processes: int = 1, seed: int = DEFAULT_SEED,
              field: Optional[FieldSpec] = None, corpus_name: str = "", log_file: Optional[str] = None,
              verbose: bool = False) -> Report:
    """
    Runs every check in check_ids on every corpus graph (one graph per task when num_processes > 1).

    Totals do not depend on the worker count; failure lists are sorted by graph id, so the report is deterministic
    apart from wall_ms.
    """
    check_ids = list(check_ids)
    for cid in check_ids:
        if cid not in CHECKS:
            raise ParameterError(f"Unknown check id '{cid}'. Known checks: {', '.join(CHECKS)}")
    graphs = list(corpus)
    logger = VerificationLogger(log_file, verbose)
    start = time()
    logger.print_to_log_file(f"verifying {len(check_ids)} checks on {len(graphs)} graphs ({corpus_name}), "
                             f"{num_processes} process(es), seed {seed}", also_print_to_console=verbose)

    per_graph = _evaluate_corpus(graphs, run_checks_on_graph, (check_ids, seed, field), num_processes, verbose)
    _log_results(logger, graphs, per_graph)

    report = Report(corpus_name, seed, summarize([r for rs in per_graph for r in rs], check_ids))
    report.per_graph = logger.get_checkpoint()
    report.wall_ms = int(round((time() - start) * 1000))
    logger.print_to_log_file(f"done in {report.wall_ms} ms, {report.num_failures} failure(s)",
                             also_print_to_console=verbose)
    return report


def power_conjecture_results(g: Graph, s_range: Optional[Tuple[int, int]] = None,
                             seed: int = DEFAULT_SEED) -> List[CheckResult]:
    """reg(I(G)^[s]) <= match + s for 1 <= s <= match, reported like chk-conj."""
    ctx = GraphContext(g, seed=seed)
    cid = 'chk-conj-sqf-power'
    if g.num_edges == 0:
        return [ctx.skipped(cid, "graph has no edges")]
    match = ctx.invariants.match
    lo, hi = (1, match) if s_range is None else (max(1, s_range[0]), min(match, s_range[1]))
    results = []
    for s in range(lo, hi + 1):
        r = ctx.reg(ctx.power(s))
        results.append(ctx.compare(cid, {'s': s, 'tight': r == match + s}, r, match + s, r <= match + s))
    return results or [ctx.skipped(cid, "s range empty for this graph")]


def symbolic_conjecture_results(g: Graph, s_range: Optional[Tuple[int, int]] = None,
                                seed: int = DEFAULT_SEED) -> List[CheckResult]:
    ctx = GraphContext(g, seed=seed)
    if s_range is None or g.num_edges == 0:
        return CHECKS['chk-conj'](ctx)
    results = []
    for s in range(max(1, s_range[0]), min(ctx.invariants.height, s_range[1]) + 1):
        ctx.requested_s = s
        results += CHECKS['chk-conj'](ctx)
    return results or [ctx.skipped('chk-conj', "s range empty for this graph")]


def explore_conjecture(corpus: Iterable[Graph], s_range: Optional[Tuple[int, int]] = None,
                       kind: str = 'sqf-symbolic', num_processes: int = 1, seed: int = DEFAULT_SEED,
                       corpus_name: str = "", log_file: Optional[str] = None, verbose: bool = False) -> Report:
    """
    Evaluates reg <= match + s over the corpus and lists every tight instance and every violation. This never asserts
    anything: a violation is a finding, recorded in report.exploration.
    """
    if kind not in EXPLORE_KINDS:
        raise ParameterError(f"Unknown exploration kind '{kind}', expected one of {EXPLORE_KINDS}")
    graphs = list(corpus)
    logger = VerificationLogger(log_file, verbose)
    start = time()
    logger.print_to_log_file(f"exploring reg <= match + s ({kind}) on {len(graphs)} graphs ({corpus_name})",
                             also_print_to_console=verbose)
    worker = symbolic_conjecture_results if kind == 'sqf-symbolic' else power_conjecture_results
    per_graph = _evaluate_corpus(graphs, worker, (s_range, seed), num_processes, verbose)
    _log_results(logger, graphs, per_graph)

    results = sorted((r for rs in per_graph for r in rs), key=lambda r: r.sort_key)
    check_id = 'chk-conj' if kind == 'sqf-symbolic' else 'chk-conj-sqf-power'
    report = Report(corpus_name, seed, summarize(results, [check_id]))
    report.per_graph = logger.get_checkpoint()
    report.exploration = {
        'kind': kind,
        's_range': list(s_range) if s_range is not None else None,
        'tight': [r.to_dict() for r in results if r.status == PASS and r.params.get('tight')],
        'violations': [r.to_dict() for r in results if r.status == FAIL],
    }
    report.wall_ms = int(round((time() - start) * 1000))
    logger.print_to_log_file(f"{len(report.exploration['tight'])} tight instance(s), "
                             f"{len(report.exploration['violations'])} violation(s)", also_print_to_console=verbose)
    return report
