# Tests for eisenlite
