"""
Combining scholars' paper sets with operator labels
===================================================

Every scholar carries one of four labels: And, Or, Not, or Ignore. The
combined set is (union of Or-scholars, intersected with every And-scholar,
minus every Not-scholar). Ignore drops the scholar from the formula.
The label string is generated, never typed in.
"""

from pathlib import Path

from scholarslice import CombinationSpec, combine, filter_years, load_corpus, timeline

BASE = Path(__file__).resolve().parent.parent / "fixtures" / "corpus"
corpus = load_corpus(
    str(BASE / "papers.jsonl"),
    str(BASE / "citations.csv"),
    str(BASE / "venues.json"),
    str(BASE / "profiles.jsonl"),
)

# Intersection: papers Ada and Bruno wrote together.
both = combine(corpus, CombinationSpec.from_strings({"s01": "and", "s02": "and"}))
print(f"{both.label!r} -> {len(both)} papers")

# Union with an exclusion: anything by Bruno or Chen, minus Ada's papers.
trio = combine(
    corpus,
    CombinationSpec.from_strings({"s02": "or", "s03": "or", "s01": "not"}),
)
print(f"{trio.label!r} -> {len(trio)} papers")

# Mixing And with an Or-group parenthesizes the group.
mixed = combine(
    corpus,
    CombinationSpec.from_strings({"s01": "and", "s04": "or", "s05": "or"}),
)
print(f"{mixed.label!r} -> {len(mixed)} papers")

# A timeline counts papers per publication year, unknown years last.
print()
print(f"timeline of {both.label!r}:")
for year, count in timeline(corpus, both).items():
    print(f"  {year}: {'#' * count}")

# Year filtering produces a new set with the range stamped into the label.
recent = filter_years(corpus, mixed, 2015, 2020)
print()
print(f"{recent.label!r} -> {len(recent)} papers")
