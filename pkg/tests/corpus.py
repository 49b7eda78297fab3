"""Named example strings shared by the test modules."""

# op-period 4 with shifts {0, 2, 3} vs. all four shifts
BLOCKS_PARTIAL = (0, 0, 3, 2, 1, 1, 3, 2, 1, 1, 4, 3)
BLOCKS_SLIDING = (1, 1, 2, 5, 1, 1, 3, 4, 1, 1, 2, 4)

# window shapes of width 6 repeat with period 3
ZIGZAG_18 = (0, 12, 6, 1, 11, 6, 2, 10, 6, 3, 9, 6, 4, 8, 6, 5, 7, 6)

# coprime op-periods (8, 5) and (5, 2), no monotonicity
TWO_PERIODS_18 = (6, 18, 2, 15, 17, 3, 16, 1, 5, 14, 4, 7, 8, 10, 13, 9, 11, 12)

SHAPE_SAMPLE = (5, 2, 7, 5, 1, 3, 10, 3, 5)
TRACE_SAMPLE = (7, 5, 8, 1, 4, 6, 2, 4, 5)
