"""Acceptance battery.

Seven criteria, one test each, so a verbose run prints exactly one
pass/fail line per criterion. Each test also enforces its stated
runtime budget.
"""

import itertools
import json
import time
from pathlib import Path

from beliefcheck.audit import (
    ModelSource,
    audit,
    enumerate_correspondences,
    sample_monotone_operators,
    standard_space,
    _pattern_game,
)
from beliefcheck.core import (
    Axiom,
    BeliefModel,
    BeliefOperator,
    FrameProperty,
    correspondence_property,
)
from beliefcheck.dsl import parse_model_spec, serialize_model_spec
from beliefcheck.games import iesda
from beliefcheck.qualitative import operator_of, type_mapping_of
from beliefcheck.signals import certain_of

GOLDEN = Path(__file__).parent / "golden"


def _blindspot():
    text = (GOLDEN / "blindspot.bm").read_text(encoding="utf-8")
    return parse_model_spec(text)


def test_criterion_1_worked_example():
    start = time.monotonic()
    doc = _blindspot()
    model = doc.belief_model()
    space = model.space
    op = model.operator("1")
    # B(E) = E minus the blind spot, except the whole space is fixed
    full = space.size - 1
    blind = 1 << space.index("ω3")
    for e in range(space.size):
        expected = full if e == full else e & ~blind
        assert op.apply_bits(e) == expected
    uniform = certain_of(model, "1", doc.signal("uniform"))
    assert uniform.holds and uniform.failures == ()
    mixed = certain_of(model, "1", doc.signal("mixed"))
    assert not mixed.holds
    assert mixed.failures == (("ω3", frozenset({"a"})),)
    # common belief coincides with player 1 on every event
    common = model.common_operator().table()
    assert common == op.table()
    elapsed = time.monotonic() - start
    assert elapsed < 1.0, f"{elapsed:.2f}s"
    print(f"criterion 1 (worked example, {elapsed:.2f}s): PASS")


def test_criterion_2_axiom_oracle_equivalence():
    start = time.monotonic()
    dictionary = {
        Axiom.CONSISTENCY: FrameProperty.SERIAL,
        Axiom.TRUTH: FrameProperty.REFLEXIVE,
        Axiom.POSITIVE_INTROSPECTION: FrameProperty.TRANSITIVE,
        Axiom.NEGATIVE_INTROSPECTION: FrameProperty.EUCLIDEAN,
    }
    mismatches = 0
    counts = {}
    for n in (2, 3):
        counts[n] = 0
        for corr in enumerate_correspondences(n):
            counts[n] += 1
            op = BeliefOperator.from_correspondence(corr)
            for axiom, prop in dictionary.items():
                if op.check_axiom(axiom).holds != correspondence_property(corr, prop):
                    mismatches += 1
    assert counts == {2: 16, 3: 512}
    assert mismatches == 0
    # the registered frame biconditionals agree on the same sweeps
    for alias in ("frame-serial", "frame-reflexive", "frame-transitive",
                  "frame-euclidean"):
        for n in (2, 3):
            result = audit(alias, ModelSource(mode="exhaustive-kripke", n_states=n))
            assert result.passed and result.violated_total == 0
    elapsed = time.monotonic() - start
    assert elapsed < 10.0, f"{elapsed:.2f}s"
    print(f"criterion 2 (axiom oracle, {elapsed:.2f}s): PASS")


def test_criterion_3_common_belief_vs_iteration():
    start = time.monotonic()
    # every enumerated two-player Kripke model, every event
    for n in (1, 2, 3):
        result = audit(
            "common-belief-vs-iteration",
            ModelSource(mode="exhaustive-kripke", n_states=n),
        )
        assert result.passed and result.violated_total == 0
        assert result.instances == (2**n) ** (2 * n)
    # containment on sampled monotone pairs, conjunctive or not
    sampled = ModelSource(mode="sampled-monotone", n_states=3, seed=0, count=20_000)
    result = audit("common-belief-vs-iteration", sampled)
    assert result.passed and result.violated_total == 0
    # with at least one strict inclusion on record
    gaps = audit("strict-iteration-gap", sampled)
    assert gaps.passed
    assert gaps.counterexamples_total == 25
    assert gaps.counterexamples
    elapsed = time.monotonic() - start
    assert elapsed < 60.0, f"{elapsed:.2f}s"
    print(f"criterion 3 (fixed point vs iteration, {elapsed:.2f}s): PASS")


def test_criterion_4_certainty_audits():
    start = time.monotonic()
    claims = (
        "prop1-1a", "prop1-1b", "prop1-1c", "prop1-2a", "prop1-2b",
        "remark1-1a", "remark1-1b", "remark1-1c", "remark1-2a", "remark1-2b",
        "thm1-1", "thm1-2",
        "prop4-1a", "prop4-1b",
    )
    for claim in claims:
        for n in (1, 2, 3):
            result = audit(claim, ModelSource(mode="exhaustive-kripke", n_states=n))
            assert result.passed and result.violated_total == 0, claim
        result = audit(
            claim,
            ModelSource(mode="sampled-monotone", n_states=3, seed=1, count=10_000),
        )
        assert result.passed and result.violated_total == 0, claim
    elapsed = time.monotonic() - start
    assert elapsed < 300.0, f"{elapsed:.2f}s"
    print(f"criterion 4 (certainty audits, {elapsed:.2f}s): PASS")


def test_criterion_5_counterexample_existence():
    # (a) common belief equals every individual operator, yet the
    # players are not commonly certain of the type profile
    result = audit(
        "thm1-2-converse-fails", ModelSource(mode="exhaustive-kripke", n_states=2)
    )
    assert result.passed
    assert result.counterexamples_total == 56
    # (b) positively but not negatively introspective, certain through
    # believed-event sets yet not their complements
    result = audit(
        "beta-not-negbeta-exists", ModelSource(mode="exhaustive-kripke", n_states=2)
    )
    assert result.passed
    assert result.counterexamples_total == 6
    # the worked three-state example is itself such a model
    op = _blindspot().belief_model().operator("1")
    assert op.check_axiom(Axiom.POSITIVE_INTROSPECTION).holds
    assert not op.check_axiom(Axiom.NEGATIVE_INTROSPECTION).holds
    print("criterion 5 (counterexamples found): PASS")


def test_criterion_6_game_audits():
    start = time.monotonic()
    game_claims = ("thm2", "thm2-kripke-pi", "thm2-kripke-ni", "epistemic-iesda")
    full = ModelSource(mode="exhaustive-games")
    for claim in game_claims:
        result = audit(claim, full)
        assert result.passed and result.violated_total == 0, claim
        assert result.instances == 331_776
    larger = ModelSource(
        mode="sampled-monotone", n_states=4, n_players=2, n_actions=3,
        seed=7, count=5_000,
    )
    for claim in game_claims:
        result = audit(claim, larger)
        assert result.passed and result.violated_total == 0, claim
    for n in (1, 2, 3):
        result = audit("prop5", ModelSource(mode="exhaustive-kripke", n_states=n))
        assert result.passed and result.violated_total == 0
    result = audit(
        "prop5", ModelSource(mode="sampled-monotone", n_states=3, seed=1, count=10_000)
    )
    assert result.passed and result.violated_total == 0
    # the dilemma leaves exactly the mutual-defection profile
    pd = parse_model_spec(
        (GOLDEN / "pd.bm").read_text(encoding="utf-8")
    ).game_model()
    trace = iesda(pd.game)
    assert trace.survivors == (("D",), ("D",))
    # elimination order never changes the survivors
    games = [pd.game] + [_pattern_game(k) for k in range(81)]
    for game in games:
        maximal = iesda(game, mode="maximal").survivors
        for seed in range(50):
            assert iesda(game, mode="seeded", seed=seed).survivors == maximal
    elapsed = time.monotonic() - start
    assert elapsed < 300.0, f"{elapsed:.2f}s"
    print(f"criterion 6 (game audits, {elapsed:.2f}s): PASS")


def test_criterion_7_round_trips_and_determinism():
    # operator <-> type mapping, exhaustively then sampled
    for n in (1, 2):
        for corr in enumerate_correspondences(n):
            op = BeliefOperator.from_correspondence(corr)
            assert operator_of(type_mapping_of(op)).table() == op.table()
    for op in sample_monotone_operators(3, 2, 500):
        assert operator_of(type_mapping_of(op)).table() == op.table()
    # DSL files reserialize byte-identically
    for name in ("blindspot.bm", "pd.bm", "fc_violation.bm"):
        text = (GOLDEN / name).read_text(encoding="utf-8")
        assert serialize_model_spec(parse_model_spec(text)) == text, name
    # fixed-seed audits emit identical JSON, run to run and job to job
    source = ModelSource(mode="sampled-monotone", n_states=3, seed=9, count=500)
    first = json.dumps(audit("thm1-2", source).to_dict())
    second = json.dumps(audit("thm1-2", source).to_dict())
    assert first == second
    exhaustive = ModelSource(mode="exhaustive-kripke", n_states=2)
    inline = json.dumps(audit("remark1-2b", exhaustive, jobs=1).to_dict())
    parallel = json.dumps(audit("remark1-2b", exhaustive, jobs=2).to_dict())
    assert inline == parallel
    print("criterion 7 (round trips and determinism): PASS")
