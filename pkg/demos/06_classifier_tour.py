"""One morphism per classifier branch, with the full verdict report for one.

Run: python3 demos/06_classifier_tour.py
"""

import json

from abmorph import classify, parse_morphism, verdict_report

TOUR = [
    "a->ab; b->ba",
    "a->aba; b->bab",
    "a->ab; b->aabb",
    "a->ab; b->a",
    "a->aab; b->bbaab",
    "a->aaab; b->abbb",
    "a->ab; b->aa",
    "a->ab; b->b",
    "a->aab; b->b",
    "a->ab; b->bbaa",
]

print(f"{'morphism':22s} {'answer':22s} {'certainty':14s} reason")
for text in TOUR:
    v = classify(parse_morphism(text))
    claimed = ""
    if v.claimed_period is not None:
        claimed = f"  (preperiod {v.claimed_preperiod}, period {v.claimed_period})"
    print(f"{text:22s} {v.answer:22s} {v.certainty:14s} {v.reason}{claimed}")

f = parse_morphism("a->ab; b->aabb")
report = verdict_report(f, classify(f))
print("\nfull JSON report for a->ab; b->aabb:")
print(json.dumps(report, indent=2, sort_keys=True))
