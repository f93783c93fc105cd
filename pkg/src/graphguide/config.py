"""Central configuration constants.

Every tunable used by the layout, rendering, and scoring code lives here so
that renders are reproducible from one place.
"""

# Canvas (abstract units, y grows downward as in SVG)
CANVAS_WIDTH = 1000.0
CANVAS_HEIGHT = 800.0
CANVAS_MARGIN_FRACTION = 0.05

# Node drawing
NODE_RADIUS = 8.0
NODE_FILL = "#4878a8"
NODE_STROKE = "#1f3d57"
LABEL_FONT_SIZE = 11.0

# Edge drawing
EDGE_STROKE = "#555555"
EDGE_WIDTH = 1.5
ARROW_HEAD_LENGTH = 10.0
ARROW_HEAD_WIDTH = 7.0

# Tapered edges: width at the source end, shrinking linearly to the target.
TAPER_MAX_WIDTH = 8.0

# Partially drawn edges: fraction of the edge length drawn from the source.
PARTIAL_EDGE_FRACTION = 0.75

# Curved edges: control-point offset as a fraction of the edge length,
# bowed clockwise (screen orientation) from the source.
CURVE_OFFSET_FRACTION = 0.15

# Animated-pattern edges: dash geometry plus the dash-offset cycle the UI
# (or the emitted SVG animation element) should run.
DASH_PATTERN = (8.0, 6.0)
DASH_CYCLE_SECONDS = 1.0

# Cluster overlays
HULL_PADDING = 14.0
HULL_STROKE = "#c08030"
BUBBLE_PADDING = 26.0
BUBBLE_FILL = "#8fb8e8"
BUBBLE_OPACITY = 0.35
BUBBLE_ARC_STEP_DEGREES = 20.0

# Per-edge attribute bar charts
EDGE_BAR_WIDTH = 5.0
EDGE_BAR_MAX_HEIGHT = 24.0
EDGE_BAR_FILL = "#6a51a3"

# Force-directed layout
FORCE_ITERATIONS = 300
FORCE_INITIAL_TEMPERATURE_FRACTION = 0.1  # of canvas width

# Suitability: study ranges are widened by this relative margin before a
# graph's node count / density is tested against them.
SUITABILITY_RANGE_MARGIN = 0.20

# Dynamic-graph generation: per time step, this fraction of the previous
# step's edges is removed and the same number of fresh edges added.
TIMESTEP_CHURN_FRACTION = 0.05

# Service defaults
SESSION_GRAPH_CAP = 64
REGISTRY_ENV_VAR = "GRAPHGUIDE_REGISTRY"
