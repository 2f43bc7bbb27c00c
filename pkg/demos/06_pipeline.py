"""The whole verification run, as the CLI does it, from Python.

Run: python demos/06_pipeline.py
"""

import json

from lagsphere.report import emit_json, verify_paper

report = verify_paper(samples=200)
print(report.table())

doc = json.loads(emit_json(report))
failed = [c["id"] for c in doc["checks"] if c["status"] == "fail"]
print("\nfailed checks:", failed or "none")
