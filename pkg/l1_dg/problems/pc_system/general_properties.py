from l1_dg.solver.interface_flux_type import InterfaceFluxType


class GeneralProperties:
    component_count = 2
    interface_flux_types = [InterfaceFluxType.LOCAL_LAX_FRIEDRICHS, InterfaceFluxType.ENTROPY_CONSERVATIVE, InterfaceFluxType.ENTROPY_STABLE]
    has_reference = False
    max_t_end = None
