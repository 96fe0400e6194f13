"""Rewrite the bundled .poly files and their expected-report fixtures.

Run after changing a catalog builder or the report format, then review the
diff: the fixtures are golden files compared byte for byte by the tests.
"""

from pathlib import Path

import coxgrowth
from coxgrowth import report
from coxgrowth.catalog import load_catalog, write_catalog
from coxgrowth.cli import RunConfig, polyhedron_report

root = Path(coxgrowth.__file__).parent / "catalog"
for path in write_catalog(root):
    print("wrote", path)
cfg = RunConfig("growth-poly")
for name, P in load_catalog().items():
    data, _, _ = polyhedron_report(P, cfg)
    path = root / "fixtures" / f"{name}.json"
    path.parent.mkdir(exist_ok=True)
    path.write_text(report.dumps(data))
    print("wrote", path)
