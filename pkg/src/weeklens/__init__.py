"""weeklens: thrice-daily EMA collection and one-week dashboard rendering.

The package splits into five layers that can be used independently:

* `model` — survey schema, typed answers, validation, the 21-slot week
* `scheduling` — crossover study plans, reminders, compliance metrics
* `store` — append-only single-file persistence, exports, forensics
* `render` — deterministic SVG dashboard (ten aligned, facet-coloured charts)
* `synth` — seeded generator of realistic, gap-ridden participant weeks

`service` (HTTP API) and `cli` tie the layers together for deployment.
"""

from . import model, render, scheduling, store, synth

__version__ = "0.1.0"

__all__ = ["model", "render", "scheduling", "store", "synth", "__version__"]
