"""Block parameter validation utilities"""

from config.settings import ENUMERATION_CAP_BITS, MAX_ORACLE_DEPTH


def validate_stride(stride):
    """Validate a fan stride"""
    if not isinstance(stride, int) or isinstance(stride, bool):
        return False, "Stride must be an integer"
    if stride < 1:
        return False, "Stride must be at least 1"
    return True, "Valid stride"


def validate_offset(offset, label="Offset"):
    if not isinstance(offset, int) or isinstance(offset, bool):
        return False, f"{label} must be an integer"
    if offset < 0:
        return False, f"{label} must be non-negative"
    return True, f"Valid {label.lower()}"


def validate_deviation(dev):
    """Validate a fan tail deviation word"""
    if not isinstance(dev, str):
        return False, "Deviation must be a bit string"
    if set(dev) - set("01"):
        return False, f"Deviation {dev!r} may only contain 0 and 1"
    return True, "Valid deviation"


def validate_mask(mask):
    """A cube mask needs infinitely many free coordinates"""
    if not mask.has_infinite_free():
        return False, f"Mask {mask} has finitely many free coordinates (the cube would be finite)"
    return True, "Valid mask"


def validate_coding(mask, start, step):
    """Coding positions are fixed mask positions g >= start with g - start divisible by step"""
    _, period = mask.horizon(mask)
    horizon = max(start, len(mask.prefix))
    cycle = period * step
    if not any(not mask.is_free(g) and (g - start) % step == 0
               for g in range(horizon, horizon + cycle)):
        return False, f"No coding positions recur for mask {mask} from {start} with step {step}"
    return True, "Valid coding"


def validate_depth(depth):
    """Validate an oracle depth"""
    if not isinstance(depth, int) or depth < 0:
        return False, "Depth must be a non-negative integer"
    if depth > MAX_ORACLE_DEPTH:
        return False, f"Depth {depth} exceeds the maximum of {MAX_ORACLE_DEPTH}"
    return True, "Valid depth"


def validate_block_parameters(kind, limit=None, stride=None, offset=None, dev=None,
                              mask=None, start=None, step=None):
    """Comprehensive block parameter validation"""
    errors = []
    warnings = []

    if kind == 'fan':
        valid, msg = validate_stride(stride)
        if not valid:
            errors.append(f"Stride: {msg}")
        valid, msg = validate_offset(offset)
        if not valid:
            errors.append(f"Offset: {msg}")
        valid, msg = validate_deviation(dev)
        if not valid:
            errors.append(f"Deviation: {msg}")

    elif kind == 'cube':
        valid, msg = validate_mask(mask)
        if not valid:
            errors.append(f"Mask: {msg}")
        elif mask.prefix.count("F") > ENUMERATION_CAP_BITS:
            warnings.append(f"Mask prefix has {mask.prefix.count('F')} free coordinates; "
                            f"finite pieces cut from it may not be listable")

    elif kind == 'fanarray':
        valid, msg = validate_mask(mask)
        if not valid:
            errors.append(f"Base: {msg}")
        valid, msg = validate_offset(start, "Coding offset")
        if not valid:
            errors.append(msg)
        valid, msg = validate_stride(step)
        if not valid:
            errors.append(f"Step: {msg}")
        if not errors:
            valid, msg = validate_coding(mask, start, step)
            if not valid:
                errors.append(f"Coding: {msg}")

    else:
        errors.append(f"Unknown block kind {kind!r}")

    return errors, warnings
