from l1_dg.solver.interface_flux_type import InterfaceFluxType


class ProblemDef:
    """A periodic 1D conservation law together with the semidiscretization that integrates it.

    flux(u) and max_speed(u) act on arrays whose leading axis is the component axis; max_speed
    drops that axis. rhs(values, element, mesh, problem) is the semidiscrete right-hand side.
    """
    def __init__(self, name, component_count, flux, max_speed, initial, rhs,
                 reference=None, interface_flux=InterfaceFluxType.LOCAL_LAX_FRIEDRICHS, allowed_interface_fluxes=None):
        allowed_interface_fluxes = allowed_interface_fluxes or (InterfaceFluxType.LOCAL_LAX_FRIEDRICHS,)
        if interface_flux not in allowed_interface_fluxes:
            raise ValueError(f"Problem {name} does not support the interface flux {interface_flux}, use one of {allowed_interface_fluxes}")
        if component_count < 1:
            raise ValueError(f"Problem {name} needs at least one component, got {component_count}")

        self.name = name
        self.component_count = component_count
        self.flux = flux
        self.max_speed = max_speed
        self.initial = initial
        self.rhs = rhs
        self.reference = reference
        self.interface_flux = interface_flux
        self.boundary = "periodic"


    @property
    def has_reference(self):
        return self.reference is not None
