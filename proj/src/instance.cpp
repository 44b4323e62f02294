/* filled in by the instance module */
