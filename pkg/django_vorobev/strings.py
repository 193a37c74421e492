#! coding: utf-8
# Grillas y máscaras
GRID_DIMENSION_ERROR = u"Dimensión {} no soportada: se admite 1 ≤ d ≤ 3"
GRID_LEVEL_ERROR = u"Nivel diádico inválido: {}"
GRID_SIZE_ERROR = u"Grilla d={}, k={} excede la cantidad de celdas direccionable (2^30)"
GRID_IMMUTABLE = u"GridSpec es inmutable"
GRID_MISMATCH = u"Los conjuntos están en grillas distintas ({} y {}); alinearlas con refine o grid_approximation"
MASK_SHAPE_ERROR = u"Forma {} incompatible con {}"
WEIGHTS_RANGE_ERROR = u"Los pesos deben estar en [0, 1]"
REFINE_LEVEL_ERROR = u"No se puede refinar del nivel {} al nivel más grueso {}"
BOUNDARY_SIDE_ERROR = u"Lado de borde desconocido: {} (both, inner u outer)"
RADIUS_ERROR = u"El radio debe ser positivo: {}"
MESH_LEVEL_ERROR = u"Nivel de malla {} fuera de rango para la base {}"

# Formatos binarios
FORMAT_HEADER_ERROR = u"Archivo truncado: falta el encabezado"
FORMAT_MAGIC_ERROR = u"Se esperaba la marca {} y se leyó {!r}"
FORMAT_VERSION_ERROR = u"Versión de formato no soportada: {}"
FORMAT_LENGTH_ERROR = u"Largo de datos inválido: se esperaban {} bytes y hay {}"

# Box-counting
NO_LEVELS_ERROR = u"Se necesita al menos un nivel para contar cajas"
INSUFFICIENT_SCALES = u"Escalas insuficientes: {} niveles utilizables, se necesitan al menos 3"
EMPTY_BOUNDARY = u"Borde vacío: se toma dimensión 0"
BOUND_EXPONENT_ERROR = u"El exponente de la cota debe ser positivo: {}"

# Cobertura
COUNTS_RANGE_ERROR = u"Valores {} fuera de rango para {}"
EMPTY_REPLICATES = u"Se necesita al menos una réplica"
CURVE_ALPHAS_ERROR = u"Los quiebres deben empezar en 0, crecer estrictamente y ser menores que 1"
CURVE_VOLUMES_ERROR = u"Los volúmenes de la curva deben ser no crecientes y no negativos"
ORACLE_RANGE_ERROR = u"El oráculo devolvió valores fuera de [0, 1]: mínimo {}, máximo {}"
ORACLE_GRID_REQUIRED = u"Un oráculo necesita una grilla para muestrearse"
ORACLE_SAMPLED = u"Oráculo {} muestreado en {} con resolución 2^-{}"

# Umbrales y estimadores
TARGET_RANGE_ERROR = u"El volumen objetivo debe estar en [0, 1]: {}"
FILL_OVERFLOW = u"No se puede completar el volumen: faltan {} celdas y hay {} empatadas"
PLATEAU_DETECTED = u"λ{{p = {:.9g}}} = {:.9g} > 0: la esperanza de Vorob'ev no es única"

# Modelos booleanos
RADIUS_LAW_ERROR = u"Ley de radio inválida ({}): {}"
INTENSITY_NEGATIVE = u"Intensidad inválida ({}): {}"
WINDOW_NOT_CUBE = u"La intensidad sólo está definida sobre [0, 1]^d, no sobre {}"
STATIONARY_INTENSITY_ERROR = u"Un modelo estacionario requiere intensity.kind = constant"
NOT_STATIONARY_ERROR = u"El modelo {} no es estacionario"
DIRAC_RADIUS_WARNING = u"Radio {} sin densidad: los conjuntos de nivel pueden tener volumen positivo"
QUADRATURE_NOT_CONVERGED = u"Cuadratura de φ en nivel {}: diferencia de Richardson {:.3g} > tolerancia {:.3g}"

# Configuración
CONFIG_READ_ERROR = u"No se pudo leer la configuración: {}"
CONFIG_UNKNOWN_SECTION = u"Sección desconocida: [{}]"
CONFIG_UNKNOWN_KEY = u"Clave desconocida: {}"
CONFIG_MISSING_KEY = u"Falta la clave requerida: {}"
CONFIG_INVALID_VALUE = u"Valor inválido para {}: {}"
PLAN_INVALID = u"Valor inválido para {}: {}"
PLAN_UNKNOWN_KIND = u"Experimento desconocido: {} (opciones: {})"

# Experimentos
EXPERIMENT_STARTED = u"Experimento {} sobre {}"
EXPERIMENT_FINISHED = u"Experimento {} terminado: {} filas, aceptación {}"
REPLICATE_SIMULATED = u"Réplica {}: {} gérmenes"
TRIAL_FINISHED = u"Ensayo {} terminado ({} réplicas)"
CONSISTENCY_STATIONARY = u"La hipótesis λ{{p = α*}} = 0 no se cumple para el modelo {}: p es constante"
CONSISTENCY_RADIUS = u"La consistencia requiere un radio con densidad; {} no la tiene"
RATE_PLATEAU_WARNING = u"α = {:.9g} está sobre una meseta del oráculo: λ{{p = α}} > 0"
RESULT_WRITTEN = u"Escrito {}"

# CLI
CLI_USAGE = u"uso: rset <comando> [opciones]\ncomandos: {}\n"
CONFIG_REQUIRED = u"Se requiere --config"
MASKS_REQUIRED = u"Se requiere --masks"
DATA_ERROR = u"Error de datos o configuración: {}"
ACCEPTANCE_FAILED = u"El experimento {} no cumplió su criterio de aceptación"
SUMMARY_LINE = u"{}: {} filas, aceptación {}"
SIMULATION_FINISHED = u"{} réplicas escritas en {}"
ESTIMATE_FINISHED = u"Estimación con n={} en nivel {} escrita en {}"

# Tareas
TASK_ALREADY_RUNNING = u"Ya está corriendo un experimento"
TASK_NOT_FOUND = u"No existe la tarea {}"
KIND_CONFIG_REQUIRED = u"Sin --id se requieren --kind y --config"
TASK_STARTED = u"Corriendo {} sobre {}"
TASK_FINISHED = u"Terminado: {} filas, aceptación {}"
TASK_FAILED = u"Error en la tarea {}: {}"
