import os
import sys

# Under ctest, test the module from the CMake build tree even when an
# editable install is present.
_build = os.environ.get("PADS_SIM_BUILD_DIR")
if _build:
    sys.meta_path[:] = [f for f in sys.meta_path if type(f).__name__ != "ScikitBuildRedirectingFinder"]
    sys.path.insert(0, _build)
    for name in [m for m in sys.modules if m == "pads_sim" or m.startswith("pads_sim.")]:
        del sys.modules[name]
