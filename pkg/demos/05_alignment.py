"""
Comparing two scholars bar by bar
=================================

Two hierarchies over the same chain can be aligned: slots are matched
level by level by key, and a side missing a key gets a zero-measure
placeholder so both sides always show the same sequence of bars. Year
chains accept an offset for scholars whose careers started years apart.
"""

from pathlib import Path

from scholarslice import (
    AttributeKey,
    CombinationSpec,
    align,
    build_hierarchy,
    combine,
    describe_comparison,
    load_corpus,
)

BASE = Path(__file__).resolve().parent.parent / "fixtures" / "corpus"
corpus = load_corpus(
    str(BASE / "papers.jsonl"),
    str(BASE / "citations.csv"),
    str(BASE / "venues.json"),
    str(BASE / "profiles.jsonl"),
)

ada = combine(corpus, CombinationSpec.from_strings({"s01": "and"}))
bruno = combine(corpus, CombinationSpec.from_strings({"s02": "and"}))

chain = [AttributeKey.P_YEAR]
upper = build_hierarchy(corpus, ada, chain)
lower = build_hierarchy(corpus, bruno, chain)

comparison = align(upper, lower)
print(describe_comparison(ada.label, bruno.label, aligned=True).combined)
print()
print(f"{'key':10s} {'upper':>6s} {'lower':>6s}")
for slot in comparison.slots:
    up = slot.upper.measure if slot.upper is not None else "-"
    low = slot.lower.measure if slot.lower is not None else "-"
    print(f"{slot.key_label:10s} {up!s:>6s} {low!s:>6s}")

# With an offset, lower-side years are shifted before matching. An offset
# of -3 lines each upper year y up against lower year y + 3, which reads
# as "compare Ada's year y with Bruno three years later".
shifted = align(upper, lower, offset=-3)
print()
print("offset -3:")
for slot in shifted.slots[:8]:
    up = slot.upper.label if slot.upper is not None else "(placeholder)"
    low = slot.lower.label if slot.lower is not None else "(placeholder)"
    print(f"  slot {slot.key_label:10s} upper={up:14s} lower={low}")
