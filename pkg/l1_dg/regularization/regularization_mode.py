class RegularizationMode:
    NONE = "none"
    L1 = "l1"
    L1_MASS_CORRECTED = "l1-mc"

    ALL = (NONE, L1, L1_MASS_CORRECTED)
