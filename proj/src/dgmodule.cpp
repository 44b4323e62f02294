/* filled in by the dgmodule module */
