class InterfaceFluxType:
    LOCAL_LAX_FRIEDRICHS = "local-lax-friedrichs"
    ENTROPY_CONSERVATIVE = "entropy-conservative"
    ENTROPY_STABLE = "entropy-stable"

    ALL = (LOCAL_LAX_FRIEDRICHS, ENTROPY_CONSERVATIVE, ENTROPY_STABLE)
