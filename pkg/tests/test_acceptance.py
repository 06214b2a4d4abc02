"""Acceptance criteria, one test each.  Every test records a PASS/FAIL line;
the lines are printed in the terminal summary and when run as a script."""

import itertools
import random
import time
from collections import Counter
from pathlib import Path

from brauer_blocks.blocks import block_key, enumerate_block, in_small_set, same_block
from brauer_blocks.cell import block_of_weight, cell_dimension, simple_dim, verify_block
from brauer_blocks.cli import run
from brauer_blocks.geometry import (
    in_fundamental_alcove, in_fundamental_alcove_by_signature, is_regular, same_facet, shift,
    singularity_degree,
)
from brauer_blocks.graphs import (
    alcove_transport, check_isomorphism, mbs_graph, orbit_graph, par_e_cover_oracle,
    par_e_graph, reg_graph_pair, verify_iso,
)
from brauer_blocks.kl import kl_polynomials, parse_table_csv, predict_decomposition, rows_for_all_descents
from brauer_blocks.partitions import (
    Partition, format_compact, is_balanced, parse_partition, partitions_up_to, transpose,
)

GOLDEN = Path(__file__).parent / "data" / "kl_delta1.csv"
RESULTS: list[str] = []


def record(number: int, title: str, ok: bool, detail: str = "") -> None:
    line = f"[{'PASS' if ok else 'FAIL'}] criterion {number}: {title}" + (f" ({detail})" if detail else "")
    RESULTS.append(line)
    print(line)
    assert ok, line


def test_criterion_1_kl_table():
    import io

    t = time.perf_counter()
    out = io.StringIO()
    code = run(["kl-table", "--delta", "1", "--max-degree", "16", "--format", "csv"], out)
    elapsed = time.perf_counter() - t
    text = out.getvalue()
    cols, entries = parse_table_csv(text)
    order = {w: k for k, w in enumerate(cols)}
    values = {str(p) for p in entries.values()}
    P = parse_partition
    spot = {
        ("22", "0"): "v", ("4321", "321"): "v^2", ("53211", "4211"): "v^2",
        ("4^4", "0"): "v^2", ("552^3", "332"): "v^2",
    }
    spot_ok = all(str(entries.get((P(a), P(b)), "")) == v for (a, b), v in spot.items())
    ok = (code == 0 and text == GOLDEN.read_text() and len(cols) == 18
          and all(order[lam] <= order[nu] for nu, lam in entries)
          and values <= {"1", "v", "v^2"} and spot_ok and elapsed < 10)
    record(1, "KL table at delta=1 reproduces the golden CSV", ok,
           f"{len(cols)} weights, entries {sorted(values)}, {elapsed:.2f}s")


def test_criterion_2_block_enumeration():
    t = time.perf_counter()
    block = enumerate_block((), 1, 16)
    elapsed = time.perf_counter() - t
    cols, _ = parse_table_csv(GOLDEN.read_text())
    ok = block.members == cols and len(cols) == 18 and elapsed < 5
    record(2, "block of 0 at delta=1 to degree 16 equals the table labels", ok,
           f"{len(block.members)} members, {elapsed:.2f}s")


def test_criterion_3_criterion_equivalence():
    t = time.perf_counter()
    parts = list(partitions_up_to(10))
    compared = 0
    bad = Counter()
    for delta in [d for d in range(-5, 7) if d]:
        for a in parts:
            for b in parts:
                if (a.degree - b.degree) % 2:
                    continue
                compared += 1
                if is_balanced(a, b, delta) != same_block(a, b, delta):
                    bad[delta] += 1
    elapsed = time.perf_counter() - t
    ok = not bad and elapsed < 60
    record(3, "balanced criterion equals orbit criterion, degree <= 10, delta in -5..6", ok,
           f"{compared} comparisons, {sum(bad.values())} discrepancies, {elapsed:.1f}s")


def test_criterion_4_alcoves():
    deg12 = list(partitions_up_to(12))
    a0 = sorted(p for p in deg12 if same_facet(p, (), 1))
    a1 = sorted(p for p in deg12 if same_facet(p, (2, 1), 1))
    a2 = sorted(p for p in deg12 if same_facet(p, (3, 2, 1), 1))
    contents = a0 == [(), (1,)] and a1 == [(2, 1), (2, 2)] and a2 == [(3, 1, 1), (3, 2, 1)]
    mismatches = sum(in_fundamental_alcove(p, d) != in_fundamental_alcove_by_signature(p, d)
                     for d in (1, 2, 3, 4) for p in deg12)
    record(4, "alcove contents at delta=1 and the fundamental alcove formula", contents and mismatches == 0,
           "alcoves " + " ".join("{" + ", ".join(format_compact(p) for p in a) + "}" for a in (a0, a1, a2))
           + f"; formula mismatches {mismatches}")


def test_criterion_5_graph_isomorphisms():
    t = time.perf_counter()
    mbs, orb = mbs_graph((), 1, 16), orbit_graph((), 1, 16)
    iso_mo = check_isomorphism(mbs, orb)
    image = {v: alcove_transport(shift(v, 1)) for v in orb.vertices}
    top = max(p.degree for p in image.values())
    pe = par_e_graph(top).induced(image.values())
    transport_ok = len(set(image.values())) == len(image) and verify_iso(orb, pe, image)
    iso_op = check_isomorphism(orb, pe)
    reg_fail = []
    checked = 0
    for delta in (-2, 1, 2):
        rng = random.Random(1000 + delta)
        singular = [p for p in partitions_up_to(8) if not is_regular(p, delta)]
        for w in rng.sample(singular, 20):
            g, h, mapping = reg_graph_pair(w, delta, 10)
            checked += 1
            if not verify_iso(g, h, mapping):
                reg_fail.append((delta, w))
    oracle = par_e_cover_oracle(24)
    rules = par_e_graph(24).edge_pairs()
    ok = (iso_mo is not None and iso_op is not None and transport_ok and not reg_fail
          and rules == oracle)
    record(5, "mbs ~ orbit ~ Par_e graphs, Reg-invariance, Par_e rules vs cover oracle", ok,
           f"{len(orb.vertices)} vertices, Par_e image to degree {top}, {checked} Reg checks, "
           f"{len(reg_fail)} failures, {len(rules ^ oracle)} edge mismatches of {len(oracle)}, "
           f"{time.perf_counter() - t:.1f}s")


def test_criterion_6_descent_independence():
    multi = 0
    bad = []
    for delta in (1, 2, 3):
        for nu, rows in rows_for_all_descents(delta, 16).items():
            if len(rows) > 1:
                multi += 1
                if len({tuple(sorted((k, str(v)) for k, v in r.items())) for r in rows.values()}) > 1:
                    bad.append((delta, nu))
    record(6, "descent choice does not change N(nu), delta in 1..3, degree <= 16", not bad and multi > 0,
           f"{multi} weights with several descents, {len(bad)} disagreements")


def test_criterion_7_gram_verification():
    t = time.perf_counter()
    failures = []
    blocks = 0
    for weight in ((), (1,)):
        for n in range(1, 9):
            if n % 2 != len(weight) % 2:
                continue
            blocks += 1
            for r in verify_block(n, 1, block_of_weight(n, 1, weight)):
                if not r.passed:
                    failures.append((n, r.lam))
    spots = (simple_dim(4, (), 1) == 1 and simple_dim(6, (), 1) == 1 and cell_dimension(8, ()) == 105)
    (r0,) = [r for r in verify_block(8, 1, block_of_weight(8, 1, ())) if r.lam == ()]
    factor_ok = r0.predicted_sum == 105 and r0.factors == {(): 1, (2, 2): 1}
    elapsed = time.perf_counter() - t
    ok = not failures and spots and factor_ok and elapsed < 300
    record(7, "Gram-rank verification of blocks of 0 and (1) for n <= 8 at delta=1", ok,
           f"{blocks} blocks, {len(failures)} failures, "
           f"dim Delta_8(0) = 105 = 1 + {simple_dim(8, (2, 2), 1)}, {elapsed:.1f}s")


# Module structures at delta=1: composition factors of each standard module.
STRUCTURES = {
    0: {"0": ["0"]}, 2: {"0": ["0"]},
    4: {"0": ["0", "22"], "22": ["22"]},
    6: {"0": ["0", "22"], "22": ["22", "321"], "321": ["321"]},
    1: {"1": ["1"]}, 3: {"1": ["1", "21"], "21": ["21"]},
    5: {"1": ["1", "21"], "21": ["21", "311"], "311": ["311"]},
    7: {"41^3": ["41^3"], "311": ["311", "41^3"], "21": ["21", "311"], "1": ["1", "21"]},
    8: {"4211": ["4211"], "332": ["332"], "321": ["321", "4211", "332"], "22": ["22", "321"],
        "0": ["0", "22"]},
    9: {"51^4": ["51^4"], "333": ["333"], "41^3": ["41^3", "51^4"], "311": ["311", "41^3", "333"],
        "21": ["21", "311"], "1": ["1", "21"]},
    10: {"0": ["0", "22"], "22": ["22", "321"], "321": ["321", "4211", "332", "4321"],
         "4211": ["4211", "521^3", "4321"], "332": ["332", "4321"], "521^3": ["521^3"],
         "4321": ["4321"]},
    11: {"61^5": ["61^5"], "4331": ["4331"], "51^4": ["51^4", "61^5"], "333": ["333", "4331"],
         "41^3": ["41^3", "51^4", "4331"], "311": ["311", "41^3", "333", "4331"],
         "21": ["21", "311"], "1": ["1", "21"]},
    12: {"0": ["0", "22"], "332": ["332", "4321"], "321": ["321", "4211", "332", "4321", "4422"],
         "22": ["22", "321", "4422"], "521^3": ["521^3", "621^4", "53211"],
         "4321": ["4321", "53211", "4422"], "621^4": ["621^4"], "53211": ["53211"], "4422": ["4422"]},
}


def test_criterion_8_predictions():
    tables = {0: kl_polynomials(1, 12), 1: kl_polynomials(1, 12, root=(1,))}
    checked = 0
    bad = []
    for n, modules in STRUCTURES.items():
        table = tables[n % 2]
        labels = [transpose(w) for w in table.weights if w.degree <= n]
        for lam, factors in modules.items():
            lam = parse_partition(lam)
            factors = {parse_partition(f) for f in factors}
            for mu in labels:
                checked += 1
                if predict_decomposition(lam, mu, 1, table) != (1 if mu in factors else 0):
                    bad.append((n, lam, mu))
    spot = (predict_decomposition((2, 2), (4, 4, 2, 2), 1) == 1
            and predict_decomposition((), (3, 2, 1), 1) == 0)
    record(8, "predicted decomposition numbers match the module structures for n <= 12", not bad and spot,
           f"{checked} multiplicities, {len(bad)} mismatches")


def _small_set(delta: int, max_part: int) -> list:
    m = (-delta + 1) // 2
    width = m if delta % 2 == 0 else m + 1
    out = []
    for parts in itertools.combinations_with_replacement(range(max_part, -1, -1), width):
        w = Partition(p for p in parts if p)
        if in_small_set(w, delta):
            out.append(w)
    return out


def test_criterion_9_negative_delta():
    # the facet of 0 contains only 0
    facet0 = {d: [p for p in partitions_up_to(12) if same_facet(p, (), d)] for d in (-2, -3, -4)}
    facet0_ok = all(v == [()] for v in facet0.values())
    # exactly one representative in the small set, for delta = -2m and -2m+1
    reps_found = {}
    for delta in (-2, -3, -4, -5, -6):
        m = (-delta + 1) // 2
        # representatives have doubled coordinates bounded by those of the weight,
        # so parts never exceed 10 + m + 2 for weights of degree <= 10
        reps = Counter((block_key(w, delta), w.degree % 2) for w in _small_set(delta, 10 + m + 2))
        singular = [p for p in partitions_up_to(10) if singularity_degree(p, delta) == m]
        fails = [p for p in singular if reps[(block_key(p, delta), p.degree % 2)] != 1]
        reps_found[delta] = (len(singular), len(fails))
    reps_ok = all(f == 0 for _, f in reps_found.values())
    lower = all(singularity_degree(p, -2 * m) >= m for m in (1, 2, 3, 4, 5, 6) for p in partitions_up_to(12))
    detail = ("facet of 0 " + ("ok" if facet0_ok else "broken") + "; unique-representative failures "
              + ", ".join(f"delta={d}: {f}/{n}" for d, (n, f) in reps_found.items())
              + "; singularity degree bound " + ("ok" if lower else "broken"))
    record(9, "negative-delta structure (facet of 0, unique small-set representative, singularity bound)",
           facet0_ok and reps_ok and lower, detail)


if __name__ == "__main__":
    for name, fn in list(globals().items()):
        if name.startswith("test_criterion_"):
            try:
                fn()
            except AssertionError:
                pass
