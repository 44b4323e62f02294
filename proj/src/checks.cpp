/* filled in by the checks module */
