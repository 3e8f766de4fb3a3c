import jax

# Every operator in the package is built and applied in double precision
jax.config.update("jax_enable_x64", True)
