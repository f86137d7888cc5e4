"""Make the repository root importable when the suite is collected by pytest."""

import project_paths

project_paths.ensure_project_root()
