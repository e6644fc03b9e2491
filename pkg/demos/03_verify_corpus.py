"""Check every registered theorem on all labeled graphs with up to five vertices.

Also shows the one statement kept outside the default set because it is false.
"""
from harmpoly import verify_corpus
from harmpoly.verifier import ERRATA, REGISTRY

print(f"{len(REGISTRY)} theorems registered: {', '.join(sorted(REGISTRY))}")
report = verify_corpus(5)
print(report.to_text())

print()
print("statements known to be false:", ", ".join(ERRATA))
bad = verify_corpus(5, registry="p3_sub_min")
first = bad.failures["p3_sub_min"][0]
print(f"p3_sub_min fails {bad.fail_count} times; e.g. {first.graph6}: {first.relation}")
