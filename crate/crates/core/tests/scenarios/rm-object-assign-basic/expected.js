var x = { ...a, ...b };
var y = { ...c };
var z = Object.assign(d, e);
var w = Object.assign({}, ...rest);
Object.assign(f({}), g);
