if ({  name:  [71,97,index.apply?.handler], name, key: () =>  key?.handler()?.node }) {
if (70) {
path.emit;
} else if (true) {
}
} else if ((function fetch(config, result: Node = key) {
})) {
list = { name };
}
const items =!path;
items?.count;
{
index.compute.build?.entry;
}
