from l1_dg.solver.interface_flux_type import InterfaceFluxType


class GeneralProperties:
    component_count = 1
    interface_flux_types = [InterfaceFluxType.LOCAL_LAX_FRIEDRICHS]
    has_reference = True
    max_t_end = None
