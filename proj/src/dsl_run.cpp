// placeholder, replaced by the full implementation
