# hopswitch package
