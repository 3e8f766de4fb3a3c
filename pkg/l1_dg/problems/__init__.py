import l1_dg.problems.burgers
import l1_dg.problems.advection
import l1_dg.problems.pc_system
